#include "sgtop/stream_semigroup.hpp"

#include <random>         // for mt19937_64
#include <unordered_set>  // for unordered_set
#include <utility>        // for move

namespace sgtop {

  std::vector<std::string> const& known_fact_names() {
    static std::vector<std::string> const names
        = {"bounded",          "chain_finite",        "clifford",
           "clifford_finite",  "clifford_plus_finite", "clifford_singular",
           "commutative",      "e_well_founded",       "eventually_clifford",
           "ez_chain_finite",  "ez_infinite",          "ez_well_founded",
           "finite",           "group_bounded",        "group_finite",
           "nonsingular",      "periodic",             "unipotent"};
    return names;
  }

  void validate_facts(DeclaredFacts const& facts) {
    auto const& names = known_fact_names();
    for (auto const& [key, value] : facts) {
      std::string_view k = key;
      if (k.starts_with("center.")) {
        k.remove_prefix(7);
      }
      bool found = false;
      for (auto const& n : names) {
        found = found || n == k;
      }
      if (!found) {
        throw BadParameter("unknown declared fact \"" + key + "\"");
      }
    }
  }

  StreamSemigroup::StreamSemigroup(Spec          spec,
                                   std::size_t   sampled_triples,
                                   std::uint64_t seed)
      : _spec(std::move(spec)) {
    if (!_spec.multiply || !_spec.element_at) {
      throw BadParameter("stream semigroup needs multiply and element_at");
    }
    validate_facts(_spec.facts);

    std::unordered_set<Element> seen;
    ElementList                 sample;
    for (std::uint64_t i = 0; i < 1024; ++i) {
      Element const x = _spec.element_at(i);
      if (!seen.insert(x).second) {
        throw BadParameter("enumerator of " + _spec.name
                           + " repeats the code " + std::to_string(x));
      }
      if (i < 512) {
        sample.push_back(x);
      }
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    for (std::size_t t = 0; t < sampled_triples; ++t) {
      Element const x = sample[pick(rng)], y = sample[pick(rng)],
                    z = sample[pick(rng)];
      if (product(product(x, y), z) != product(x, product(y, z))) {
        throw NonAssociative(x, y, z);
      }
    }
  }

  DivisionResult StreamSemigroup::left_division(Element     b,
                                                Element     e,
                                                std::size_t limit) const {
    if (!_spec.left_division) {
      throw NoDivisionOracle(_spec.name + " has no left division oracle");
    }
    return _spec.left_division(b, e, limit);
  }

}  // namespace sgtop
