#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfcalc/presentation.hpp"

namespace hopfcalc {

/// Names of the built-in presentations. The first nine are the rows of the
/// homology tables, in table order.
const std::vector<std::string>& corpus_names();

/// The first nine corpus names.
std::vector<std::string> table_group_names();

/// Built-in presentation text in the `gens:` / `rel:` format. Throws
/// InvalidArgument listing the available names.
std::string_view corpus_text(std::string_view name);
Presentation corpus(std::string_view name);

/// Substitution from SL2Z7Z7_14GEN onto the generators of SL2Z7Z7_6GEN.
std::string_view sl2z7_substitution_text();
SubstitutionMap sl2z7_substitution();

/// Published spanning set of N/N^7[F,N] for SL2Z7Z7_6GEN (12 words) and the
/// published H2 generator list (6 words), over the generators of that entry.
const std::vector<std::string>& sl2z7_published_spanning_set();
const std::vector<std::string>& sl2z7_published_generators();

}  // namespace hopfcalc
