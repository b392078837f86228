#include "nonindiv/qset/quasi_function.hpp"

#include "nonindiv/qset/ops.hpp"

namespace nonindiv::qset {

std::string QfVerdict::describe() const {
  switch (kind) {
    case Kind::Ok:
      return "ok";
    case Kind::Congruence:
      return "pairs " + std::to_string(first) + " and " + std::to_string(second) +
             " have indistinguishable inputs but distinguishable outputs";
    case Kind::OutsideDomain:
      return "input of pair " + std::to_string(first) + " is not in the domain";
    case Kind::OutsideCodomain:
      return "output of pair " + std::to_string(first) + " is not in the codomain";
  }
  return {};
}

QfVerdict validate_qf(const QuasiFunction& f) {
  using Kind = QfVerdict::Kind;
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    const auto& [in, out] = f.pairs[i];
    if (f.domain && count_indist(*f.domain, in).value() == 0) return {Kind::OutsideDomain, i, i};
    if (f.codomain && count_indist(*f.codomain, out).value() == 0) {
      return {Kind::OutsideCodomain, i, i};
    }
  }
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < f.pairs.size(); ++j) {
      if (indist(f.pairs[i].first, f.pairs[j].first) &&
          !indist(f.pairs[i].second, f.pairs[j].second)) {
        return {Kind::Congruence, i, j};
      }
    }
  }
  return {};
}

}  // namespace nonindiv::qset
