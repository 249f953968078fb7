#include "hopfcalc/corpus.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "hopfcalc/error.hpp"

namespace hopfcalc {
namespace {

struct Entry {
  std::string_view name;
  std::string_view text;
};

constexpr std::string_view kGL2Z = R"(# GL2(Z) as SL2(Z) extended by the reflection c = diag(1,-1).
gens: a b c
rel: a^4
rel: b^6
rel: a^2*b^-3
rel: c^2
rel: (c*a)^2
rel: (c*b)^2
)";

constexpr std::string_view kSL2Z = R"(# SL2(Z) as the amalgam Z/4 *_{Z/2} Z/6.
gens: a b
rel: a^4
rel: b^6
rel: a^2*b^-3
)";

constexpr std::string_view kSL2F2 = R"(# SL2(F2), isomorphic to S3.
gens: a b
rel: a^2
rel: b^3
rel: (a*b)^2
)";

constexpr std::string_view kSL2F3 = R"(# SL2(F3), binary tetrahedral group <2,3,3>.
gens: s t
rel: s^3*t^-3
rel: s^3*(s*t)^-2
)";

constexpr std::string_view kSL2F5 = R"(# SL2(F5), binary icosahedral group <2,3,5>.
gens: s t
rel: s^3*t^-5
rel: s^3*(s*t)^-2
)";

constexpr std::string_view kSL2ZI = R"(# SL2(Z[i]) as the central extension by a^2 = -I of Fine's presentation of
# PSL2(Z[i]): a = [[0,-1],[1,0]], l = [[i,0],[0,-i]], t = [[1,1],[0,1]],
# u = [[1,i],[0,1]]. Relators that equal -I in SL2 carry a factor a^-2.
gens: a l t u
rel: a^4
rel: [a^2,l]
rel: [a^2,t]
rel: [a^2,u]
rel: l^2*a^-2
rel: (a*l)^2*a^-2
rel: (t*l)^2*a^-2
rel: (u*l)^2*a^-2
rel: (a*t)^3*a^-2
rel: (u*a*l)^3*a^-2
rel: [t,u]
)";

constexpr std::string_view kSL2ZOmega = R"(# SL2(Z[w]), w^3 = -1, as the central extension by a^2 = -I of the
# Fine-Schwermer presentation of PSL2(Z[w]): a = [[0,-1],[1,0]],
# l = [[w,0],[0,w^-1]] up to sign, t = [[1,1],[0,1]], u = [[1,w],[0,1]].
gens: a l t u
rel: a^4
rel: [a^2,l]
rel: [a^2,t]
rel: [a^2,u]
rel: l^3*a^-2
rel: (a*l)^2*a^-2
rel: (a*t)^3*a^-2
rel: [t,u]
rel: l*t*l^-1*t*u^-1
rel: l*u*l^-1*t
)";

constexpr std::string_view kSL2ZSqrtM5 = R"(# SL2(Z[sqrt(-5)]) as the central extension by a^2 of Swan's presentation
# of PSL2(Z[sqrt(-5)]) as quoted by Fine, with every torsion relator lifted
# to a^2. The lift and the quoted relators were not checked against
# matrices; the entry is accepted on its H1 dimensions.
gens: a t u b c
rel: a^4
rel: [a^2,t]
rel: [a^2,u]
rel: [a^2,b]
rel: [a^2,c]
rel: b^2*a^-2
rel: c^2*a^-2
rel: (a*t)^3*a^-2
rel: (a*b)^2*a^-2
rel: (a*c)^2*a^-2
rel: (u^-1*c*u*b)^2*a^-2
rel: (a*u^-1*b*u)^3*a^-2
rel: [t,u]
)";

constexpr std::string_view kPSL2Z = R"(# PSL2(Z) as the free product Z/2 * Z/3.
gens: a b
rel: a^2
rel: b^3
)";

constexpr std::string_view kSL2Z7Z7_14 = R"(# SL2(Z[1/7, zeta_7]) on 14 generators. Index families expanded over
# i,j in 1..3 (i < j), s,t in 1..6 (s < t) for [b_s,b_t], and t in 0..6 for
# the b_t families.
gens: z u1 u2 u3 a b b0 b1 b2 b3 b4 b5 b6 w
rel: b0^-1*b*a
rel: b1^-1*z^3*b*z^3*a
rel: b2^-1*z^6*b*z^6*a
rel: b3^-1*z^9*b*z^9*a
rel: b4^-1*z^12*b*z^12*a
rel: b5^-1*z^15*b*z^15*a
rel: b6^-1*z^18*b*z^18*a
rel: w^-1*z^4*u1*u2*u3
rel: z^7
rel: [z,u1]
rel: [z,u2]
rel: [z,u3]
rel: [u1,u2]
rel: [u1,u3]
rel: [u2,u3]
rel: a^4
rel: [a^2,z]
rel: [a^2,u1]
rel: [a^2,u2]
rel: [a^2,u3]
rel: a^-1*z*a*z
rel: a^-1*u1*a*u1
rel: a^-1*u2*a*u2
rel: a^-1*u3*a*u3
rel: [b1,b2]
rel: [b1,b3]
rel: [b1,b4]
rel: [b1,b5]
rel: [b1,b6]
rel: [b2,b3]
rel: [b2,b4]
rel: [b2,b5]
rel: [b2,b6]
rel: [b3,b4]
rel: [b3,b5]
rel: [b3,b6]
rel: [b4,b5]
rel: [b4,b6]
rel: [b5,b6]
rel: b^-3*a^2
rel: b^-3*b0*b1*b2*b3*b4*b5*b6
rel: b0^-7*w^-1*b0^-1*w
rel: b1^-7*w^-1*b1^-1*w
rel: b2^-7*w^-1*b2^-1*w
rel: b3^-7*w^-1*b3^-1*w
rel: b4^-7*w^-1*b4^-1*w
rel: b5^-7*w^-1*b5^-1*w
rel: b6^-7*w^-1*b6^-1*w
rel: (b0*b1^-1*a^-1*u1)^3
rel: (b0*b2^-1*a^-1*u2)^3
rel: (b0*b3^-1*a^-1*u3)^3
rel: (b0*b1^-1*b2^-1*b3*a^-1*u1*u2)^3
rel: (b0*b1^-1*b3^-1*b4*a^-1*u1*u3)^3
rel: (b0*b2^-1*b3^-1*b5*a^-1*u2*u3)^3
rel: (b0*b1^-1*b2^-1*b3*b4*b5*b6^-1*a^-1*u1*u2*u3)^3
rel: a^-2*b^-1*u1*b*z^-3*b^-1*b0^-1*z^3*b*z^-1*u1
rel: a^-2*b^-1*u2*b*z^-6*b^-1*b0^-1*z^6*b*z^-2*u2
rel: a^-2*b^-1*u3*b*z^-9*b^-1*b0^-1*z^9*b*z^-3*u3
)";

constexpr std::string_view kSL2Z7Z7_6 = R"(# SL2(Z[1/7, zeta_7]) on 6 generators, 32 relators.
gens: z u1 u2 u3 a b1
rel: z*u3*z^-1*u3^-1
rel: u2*u3*u2^-1*u3^-1
rel: u1*u2*u1^-1*u2^-1
rel: u3*a*u3*a^-1
rel: u1*a*u1*a^-1
rel: z*u2*z^-1*u2^-1
rel: a^4
rel: u1*u3*u1^-1*u3^-1
rel: z*a*z*a^-1
rel: z*u1*z^-1*u1^-1
rel: u2*a*u2*a^-1
rel: z^7
rel: b1*z^-1*b1*z*b1^-1*z^-1*b1^-1*z
rel: b1*z^-2*b1*z^2*b1^-1*z^-2*b1^-1*z^2
rel: z^-3*b1*z^-1*a^-1*b1*z^-1*a^-1*b1*z^3*a
rel: b1*z^-3*b1*z^-2*b1^-2*z^-1*a^-1*u3*a^-1*z^-1*b1^-1*u3
rel: b1*z^-1*b1^-2*z^-1*b1*a^-1*z^3*u2*a^-1*z^-2*b1^-1*u2
rel: b1*z^-1*b1*z^-3*b1^-2*z^-1*u1^-1*a^-2*z^-2*b1^-1*u1
rel: b1*z^-3*b1*z^3*b1^-1*z^-3*b1^-1*z^3
rel: z^-1*b1^-7*z*u2^-1*z*u3^-1*u1^-1*z*b1^-1*z^-1*u1*z^-1*u2*u3
rel: b1^-7*u2^-1*z*u3^-1*u1^-1*z^2*b1^-1*z^-3*u1*u2*u3
rel: z^-3*b1^-7*z^-1*u2^-1*z^-2*u3^-1*u1^-1*z^-1*b1^-1*u1*u2*u3
rel: z*b1^-7*u2^-1*u3^-1*u1^-1*z^3*b1^-1*z^-3*u1*z^-1*u2*u3
rel: z^3*b1^-7*u2^-1*z^-2*u3^-1*u1^-1*z^-2*b1^-1*z*u1*u2*u3
rel: z^2*b1*z^-3*b1*z^-3*b1*z*b1*z*b1*z^3*b1*z^-1*b1*a^-2
rel: z^-3*b1*z^-1*b1^-1*u2^-1*a^-1*b1*z^-1*b1^-1*z^-3*u2^-1*a^-1*z^-3*b1*z^-1*b1^-1*z^-3*u2^-1*a^-1
rel: z^-1*b1^-1*z^-2*b1*z^3*u3^-1*a^-1*z^-1*b1^-1*z^-2*b1*z^3*u3^-1*a^-1*z^-1*b1^-1*z^-2*b1*z^3*u3^-1*a^-1
rel: b1^-1*z^-3*b1*z*a^-1*z^-2*u1*b1^-1*z^-3*b1*z^3*u1^-1*a^-1*b1^-1*z^-3*b1*z^3*u1^-1*a^-1
rel: b1^-1*z^-1*b1*z^-2*b1*z^-1*b1^-1*a^-1*z^3*u1*u2*z^3*b1^-1*z*b1*z^2*b1*z*b1^-1*u1^-1*a^-1*u2*z^3*b1^-1*z*b1*z^2*b1*z*b1^-1*u1^-1*a^-1*u2
rel: b1^-1*z^-1*b1^-1*z^-2*b1*z^-2*b1*z^-1*u1^-1*z^-1*a^-1*u3*z^-3*b1*z^2*b1^-1*z*b1^-1*z^2*b1*u1^-1*z^-2*a^-1*u3*z^-1*b1^-1*z^-2*b1*z^3*b1^-1*z^2*b1*u1^-1*z^-2*a^-1*u3
rel: b1^-1*z^3*b1^-1*z^-1*b1*z^-1*b1*z*a^-1*z^-2*u3*u2*z^-3*b1*z^-1*b1^-1*z^2*b1*z*b1^-1*z*u3^-1*a^-1*u2*z^-3*b1*z^-1*b1^-1*z^2*b1*z*b1^-1*z*u3^-1*a^-1*u2*z^3
rel: z*b1*z^-3*b1^-1*z^-3*b1*z*u1^-1*z*a^-1*u2*u3*z^-3*b1*z^-1*b1^-1*z^-1*b1*z^3*b1*z^2*b1^-1*z*b1^-1*z^-1*u1^-1*a^-1*u2*u3*z^-3*b1*z^-1*b1^-1*z^-1*b1*z^3*b1*z^2*b1^-1*z*b1^-1*z^-1*u1^-1*a^-1*u2*u3*b1^-1*z^2*b1*z*b1^-1
)";

constexpr std::string_view kZ2xZ2 = R"(# Klein four group.
gens: a b
rel: a^2
rel: b^2
rel: [a,b]
)";

constexpr std::string_view kQ8 = R"(# Quaternion group of order 8.
gens: a b
rel: a^4
rel: a^2*b^-2
rel: b^-1*a*b*a
)";

constexpr std::string_view kS3 = R"(# S3 as a Coxeter group.
gens: x y
rel: x^2
rel: y^2
rel: (x*y)^3
)";

constexpr std::array<Entry, 14> kEntries{{
    {"GL2_Z", kGL2Z},
    {"SL2_Z", kSL2Z},
    {"SL2_F2", kSL2F2},
    {"SL2_F3", kSL2F3},
    {"SL2_F5", kSL2F5},
    {"SL2_ZI", kSL2ZI},
    {"SL2_ZOMEGA", kSL2ZOmega},
    {"SL2_ZSQRTM5", kSL2ZSqrtM5},
    {"PSL2_Z", kPSL2Z},
    {"SL2Z7Z7_14GEN", kSL2Z7Z7_14},
    {"SL2Z7Z7_6GEN", kSL2Z7Z7_6},
    {"KLEIN4", kZ2xZ2},
    {"Q8", kQ8},
    {"S3_COXETER", kS3},
}};

constexpr std::size_t kTableRows = 9;

constexpr std::string_view kSubstitution = R"(targets: z u1 u2 u3 a b1
map: z -> z
map: u1 -> u1
map: u2 -> u2
map: u3 -> u3
map: a -> a
map: b -> z^-3*b1*z^3*a^-1
map: b0 -> z^-3*b1*z^3
map: b1 -> b1
map: b2 -> z^3*b1*z^-3
map: b3 -> z^-1*b1*z
map: b4 -> z^2*b1*z^-2
map: b5 -> z^-2*b1*z^2
map: b6 -> z*b1*z^-1
map: w -> z^-2*u1*z^-1*u2*u3
)";

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::vector<std::string> table_group_names() {
  const auto& all = corpus_names();
  return {all.begin(), all.begin() + kTableRows};
}

std::string_view corpus_text(std::string_view name) {
  auto it = std::find_if(kEntries.begin(), kEntries.end(),
                         [&](const Entry& e) { return e.name == name; });
  if (it == kEntries.end()) {
    std::string known;
    for (const auto& e : kEntries) {
      if (!known.empty()) known += ", ";
      known += e.name;
    }
    throw InvalidArgument("unknown corpus entry '" + std::string(name) +
                          "'; available: " + known);
  }
  return it->text;
}

Presentation corpus(std::string_view name) { return parse_presentation(corpus_text(name)); }

std::string_view sl2z7_substitution_text() { return kSubstitution; }

SubstitutionMap sl2z7_substitution() { return parse_substitution(kSubstitution); }

const std::vector<std::string>& sl2z7_published_spanning_set() {
  static const std::vector<std::string> words{
      "z*a*z*a^-1",
      "u1*u2*u1^-1*u2^-1",
      "u1*a*u1*a^-1",
      "b1*a^-1*b1*a^-1*b1*a",
      "u2*b1*z^-2*b1*z*b1^-2*a^-1*u2*z^-1*a^-1*b1^-1",
      "u3*b1*z^2*b1^-2*z^2*b1*a^-1*z^-2*u3*z^-1*a^-1*b1^-1",
      "u1*b1*z*a^-1*z^-2*a*b1^-2*z^3*b1*a^-1*u1*z^-1*a^-1*b1^-1",
      "z^2*b1^-7*z^-1*u2^-1*z^-1*u3^-1*u1^-1*z^-2*b1^-1*z^2*u1*u2*u3",
      "b1*z*b1*z^2*b1*z*b1*z^2*b1*z^3*b1*z^3*b1*z*a^-1*z^-1*a^-1",
      "b1*z^2*b1^-1*z^-1*u3^-1*z^-1*a^-1*b1*z^2*b1^-1*u3^-1*z^-2*a^-1*b1*z^2*b1^-1*u3^-1*z^-2*a^-1",
      "z^-1*b1^-1*z*b1*z*b1*z*b1^-1*u3^-1*a^-1*u2*z*b1^-1*z*b1*z^2*b1^-1*z^-1*b1*z^-1*u3^-1*a^-1*u2*z^-1*b1^-1*z*b1*z^2*b1^-1*z^-1*b1*z^-1*u3^-1*a^-1*u2",
      "b1*z^-2*b1*z*b1^-1*z^2*b1*z^2*b1^-1*z*b1^-1*z*a^-1*z^-2*u1*u2*u3*b1*z^-2*b1*z*b1^-1*z^2*b1*z^2*b1^-1*z*b1^-1*a^-1*z^-3*u1*u2*u3*b1*z^-2*b1*z*b1^-1*z^2*b1*z^2*b1^-1*z*b1^-1*a^-1*z^-3*u1*u2*u3",
  };
  return words;
}

const std::vector<std::string>& sl2z7_published_generators() {
  static const std::vector<std::string> words{
      "z*a*z*a^-1",
      "u1*u2*u1^-1*u2^-1",
      "u1*a*u1*a^-1",
      "b1*a^-1*b1*a^-1*b1*a",
      "u2*b1*z^-2*b1*z*b1^-2*a^-1*u2*z^-1*a^-1*b1^-1",
      "u3*b1*z^2*b1^-2*z^2*b1*a^-1*z^-2*u3*z^-1*a^-1*b1^-1",
  };
  return words;
}

}  // namespace hopfcalc
