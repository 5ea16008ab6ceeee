#include <algorithm>
#include <cstdlib>
#include <limits>
#include <type_traits>

#include "qdg/error.hpp"
#include "qdg/topology.hpp"

namespace qdg {

  namespace {
    // x -= q * y, reporting overflow for 64-bit entries.
    bool sub_mul(std::int64_t& x, std::int64_t q, std::int64_t y) {
      std::int64_t prod;
      if (__builtin_mul_overflow(q, y, &prod)) {
        return false;
      }
      return !__builtin_sub_overflow(x, prod, &x);
    }

    bool sub_mul(BigInt& x, BigInt const& q, BigInt const& y) {
      x -= q * y;
      return true;
    }

    bool is_unit(std::int64_t v) {
      return v == 1 || v == -1;
    }
    bool is_unit(BigInt const& v) {
      return v == 1 || v == -1;
    }

    template <typename T>
    T magnitude(T const& v) {
      return v < 0 ? T(-v) : v;
    }

    // Reduces `a` to diagonal form by unimodular row and column operations
    // and collects the nonzero diagonal. False on 64-bit overflow.
    template <typename T>
    bool diagonalize(std::vector<std::vector<T>>& a, std::vector<T>& diag) {
      std::size_t const rows = a.size();
      std::size_t const cols = rows ? a[0].size() : 0;
      if constexpr (std::is_same_v<T, std::int64_t>) {
        // -INT64_MIN is not representable
        for (auto const& row : a) {
          for (auto const& v : row) {
            if (v == std::numeric_limits<std::int64_t>::min()) {
              return false;
            }
          }
        }
      }
      for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // a unit pivot if there is one, otherwise the smallest magnitude
        std::size_t pr = rows, pc = cols;
        T best{};
        for (std::size_t i = t; i < rows && !(pr < rows && is_unit(best)); ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            auto const& v = a[i][j];
            if (v != 0 && (pr == rows || magnitude(v) < magnitude(best))) {
              best = v;
              pr = i;
              pc = j;
              if (is_unit(v)) {
                break;
              }
            }
          }
        }
        if (pr == rows) {
          break;
        }
        std::swap(a[t], a[pr]);
        if (pc != t) {
          for (auto& row : a) {
            std::swap(row[t], row[pc]);
          }
        }

        bool settled = false;
        while (!settled) {
          settled = true;
          std::vector<std::size_t> support;
          for (std::size_t j = t; j < cols; ++j) {
            if (a[t][j] != 0) {
              support.push_back(j);
            }
          }
          for (std::size_t i = t + 1; i < rows && settled; ++i) {
            if (a[i][t] == 0) {
              continue;
            }
            T q = a[i][t] / a[t][t];
            for (auto j : support) {
              if (!sub_mul(a[i][j], q, a[t][j])) {
                return false;
              }
            }
            if (a[i][t] != 0) {
              // remainder is a smaller pivot
              std::swap(a[t], a[i]);
              settled = false;
            }
          }
          if (!settled) {
            continue;
          }
          // column t is clear below t, so column operations touch row t only
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) {
              continue;
            }
            T q = a[t][j] / a[t][t];
            if (!sub_mul(a[t][j], q, a[t][t])) {
              return false;
            }
            if (a[t][j] != 0) {
              for (auto& row : a) {
                std::swap(row[t], row[j]);
              }
              settled = false;
              break;
            }
          }
        }
        diag.push_back(magnitude(a[t][t]));
      }
      return true;
    }

    // Turns any nonzero diagonal into invariant factors d1 | d2 | ...
    std::vector<BigInt> normalize(std::vector<BigInt> d) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          if (d[i] == 1) {
            break;
          }
          if (d[j] % d[i] == 0) {
            continue;
          }
          BigInt g = boost::multiprecision::gcd(d[i], d[j]);
          BigInt l = d[i] / g * d[j];
          d[i] = g;
          d[j] = l;
        }
      }
      std::sort(d.begin(), d.end());
      return d;
    }
  }  // namespace

  std::vector<BigInt> smith_normal_form(IntegerMatrix const& m) {
    auto dense = m.dense();
    std::vector<std::int64_t> diag;
    if (diagonalize(dense, diag)) {
      return normalize({diag.begin(), diag.end()});
    }
    std::vector<std::vector<BigInt>> big;
    for (auto const& row : m.dense()) {
      big.emplace_back(row.begin(), row.end());
    }
    std::vector<BigInt> bdiag;
    diagonalize(big, bdiag);
    return normalize(std::move(bdiag));
  }

  bool is_prime(std::uint64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    using Cell = std::pair<std::uint32_t, std::uint32_t>;

    std::uint32_t power(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
      std::uint64_t r = 1;
      b %= p;
      while (e) {
        if (e & 1) {
          r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>(r);
    }

    // col -= f * piv (mod p); both sorted by row
    void axpy(std::vector<Cell>& col, std::uint64_t f, std::vector<Cell> const& piv, std::uint64_t p,
              std::vector<Cell>& scratch) {
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          scratch.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          auto v = (p - f * piv[j].second % p) % p;
          scratch.emplace_back(piv[j].first, static_cast<std::uint32_t>(v));
          ++j;
        } else {
          auto v = (col[i].second + p - f * piv[j].second % p) % p;
          if (v != 0) {
            scratch.emplace_back(col[i].first, static_cast<std::uint32_t>(v));
          }
          ++i;
          ++j;
        }
      }
      col.swap(scratch);
    }
  }  // namespace

  std::size_t rank_mod_p(IntegerMatrix const& m, std::uint64_t p, std::optional<std::size_t> stop_at) {
    if (!is_prime(p) || p >= (1ull << 31)) {
      throw Error("not_prime", std::to_string(p) + " is not a prime below 2^31");
    }
    if (m.cols() > m.rows()) {
      return rank_mod_p(m.transpose(), p, stop_at);
    }
    auto const P = static_cast<std::int64_t>(p);
    std::vector<std::vector<Cell>> pivots(m.rows());
    std::vector<bool> has_pivot(m.rows(), false);
    std::size_t rank = 0;
    std::vector<Cell> col, scratch;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (stop_at && rank >= *stop_at) {
        break;
      }
      col.clear();
      for (auto const& [r, v] : m.column(j)) {
        auto red = ((v % P) + P) % P;
        if (red != 0) {
          col.emplace_back(r, static_cast<std::uint32_t>(red));
        }
      }
      while (!col.empty()) {
        auto const low = col.back().first;
        if (!has_pivot[low]) {
          // scale so the pivot entry is 1
          auto inv = power(col.back().second, p - 2, p);
          for (auto& c : col) {
            c.second = static_cast<std::uint32_t>(std::uint64_t{c.second} * inv % p);
          }
          pivots[low] = col;
          has_pivot[low] = true;
          ++rank;
          break;
        }
        axpy(col, col.back().second, pivots[low], p, scratch);
      }
    }
    return rank;
  }

}  // namespace qdg
