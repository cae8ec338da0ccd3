#include "sgtop/enumerate.hpp"

#include <algorithm>  // for next_permutation, min
#include <future>     // for async
#include <map>        // for map
#include <thread>     // for thread

#include "sgtop/types.hpp"  // for SizeCapExceeded, BadParameter

namespace sgtop {

  namespace {

    constexpr std::size_t unset = std::size_t(-1);

    void check_order(std::size_t n) {
      if (n == 0) {
        throw BadParameter("the order must be positive");
      }
      if (n > max_enumeration_order) {
        throw SizeCapExceeded("order " + std::to_string(n)
                              + " exceeds the enumeration cap of "
                              + std::to_string(max_enumeration_order));
      }
    }

    class Search {
     public:
      Search(std::size_t n, bool commutative)
          : _n(n), _commutative(commutative), _t(n * n, unset) {}

      // cells before `from` are fixed by the caller
      template <typename F>
      void run(std::size_t from, F&& emit) {
        if (from == _t.size()) {
          emit(_t);
          return;
        }
        std::size_t const x = from / _n, y = from % _n;
        if (_commutative && y < x) {
          _t[from] = _t[y * _n + x];
          if (consistent()) {
            run(from + 1, emit);
          }
          _t[from] = unset;
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _t[from] = v;
          if (consistent()) {
            run(from + 1, emit);
          }
        }
        _t[from] = unset;
      }

      std::vector<std::size_t>& table() noexcept {
        return _t;
      }

      bool consistent() const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            std::size_t const xy = _t[x * _n + y];
            if (xy == unset) {
              continue;
            }
            for (std::size_t z = 0; z < _n; ++z) {
              std::size_t const yz = _t[y * _n + z];
              if (yz == unset) {
                continue;
              }
              std::size_t const l = _t[xy * _n + z], r = _t[x * _n + yz];
              if (l != unset && r != unset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

     private:
      std::size_t              _n;
      bool                     _commutative;
      std::vector<std::size_t> _t;
    };

    FiniteSemigroup from_flat(std::vector<std::size_t> const& t, std::size_t n) {
      FiniteSemigroup::Table rows(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n * n; ++i) {
        rows[i / n][i % n] = t[i];
      }
      return FiniteSemigroup::build(rows);
    }

    std::vector<std::size_t> flat_of(FiniteSemigroup const& s) {
      std::size_t const        n = s.size();
      std::vector<std::size_t> out(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          out[x * n + y] = s.product(x, y);
        }
      }
      return out;
    }

  }  // namespace

  std::uint64_t for_each_finite(std::size_t                                        n,
                                bool                                               commutative_only,
                                std::function<void(FiniteSemigroup const&)> const& f) {
    check_order(n);
    std::uint64_t count = 0;
    Search        s(n, commutative_only);
    s.run(0, [&](std::vector<std::size_t> const& t) {
      ++count;
      f(from_flat(t, n));
    });
    return count;
  }

  std::vector<FiniteSemigroup> enumerate_finite(std::size_t             n,
                                                EnumerateOptions const& options) {
    check_order(n);
    // one task per value of the first two cells, merged in that order
    std::size_t const prefix = std::min<std::size_t>(2, n * n);
    std::size_t       tasks  = 1;
    for (std::size_t i = 0; i < prefix; ++i) {
      tasks *= n;
    }
    std::size_t threads = options.threads;
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    auto work = [&](std::size_t task) {
      std::vector<FiniteSemigroup> out;
      Search                       s(n, options.commutative_only);
      std::size_t                  k = task;
      for (std::size_t i = prefix; i-- > 0;) {
        s.table()[i] = k % n;
        k /= n;
      }
      if (!s.consistent()) {
        return out;
      }
      s.run(prefix, [&](std::vector<std::size_t> const& t) {
        out.push_back(from_flat(t, n));
      });
      return out;
    };
    std::vector<std::vector<FiniteSemigroup>> parts(tasks);
    for (std::size_t begin = 0; begin < tasks; begin += threads) {
      std::vector<std::future<std::vector<FiniteSemigroup>>> running;
      for (std::size_t t = begin; t < std::min(tasks, begin + threads); ++t) {
        running.push_back(std::async(std::launch::async, work, t));
      }
      for (std::size_t t = 0; t < running.size(); ++t) {
        parts[begin + t] = running[t].get();
      }
    }
    std::vector<FiniteSemigroup> out;
    for (auto& p : parts) {
      out.insert(out.end(), std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
    }
    if (options.dedupe_iso) {
      return dedupe_isomorphic(out);
    }
    return out;
  }

  FiniteSemigroup canonical_form(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    if (n > max_enumeration_order) {
      throw SizeCapExceeded("canonical forms are capped at order "
                            + std::to_string(max_enumeration_order));
    }
    // the relabeled table has entry (p(x), p(y)) = p(xy)
    std::vector<std::size_t> perm(n), best, t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    do {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          t[perm[x] * n + perm[y]] = perm[s.product(x, y)];
        }
      }
      if (best.empty() || t < best) {
        best = t;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return from_flat(best, n);
  }

  std::vector<FiniteSemigroup> dedupe_isomorphic(std::vector<FiniteSemigroup> const& xs) {
    std::map<std::vector<std::size_t>, bool> seen;
    std::vector<FiniteSemigroup>             out;
    for (auto const& s : xs) {
      auto c = canonical_form(s);
      if (seen.emplace(flat_of(c), true).second) {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  // derived by the enumerator and cross-checked against the naive filter
  // over all n^(n²) tables for n <= 3
  std::uint64_t frozen_labeled_count(std::size_t n, bool commutative_only) {
    check_order(n);
    static constexpr std::uint64_t all[] = {1, 8, 113, 3492};
    static constexpr std::uint64_t com[] = {1, 6, 63, 1140};
    return commutative_only ? com[n - 1] : all[n - 1];
  }

  std::uint64_t frozen_class_count(std::size_t n, bool commutative_only) {
    check_order(n);
    static constexpr std::uint64_t all[] = {1, 5, 24, 188};
    static constexpr std::uint64_t com[] = {1, 3, 12, 58};
    return commutative_only ? com[n - 1] : all[n - 1];
  }

}  // namespace sgtop
