#include "kprime/smith.hpp"

#include <stdexcept>
#include <utility>

namespace kprime {

  namespace {

    // g = x a + y b with g = gcd(a, b) >= 0.
    void extended_gcd(Integer const& a, Integer const& b, Integer& g, Integer& x, Integer& y) {
      Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Integer const q = old_r / r;
        Integer       tmp;
        tmp   = old_r - q * r;
        old_r = r;
        r     = tmp;
        tmp   = old_s - q * s;
        old_s = s;
        s     = tmp;
        tmp   = old_t - q * t;
        old_t = t;
        t     = tmp;
      }
      if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
      }
      g = old_r;
      x = old_s;
      y = old_t;
    }

    // Quotient rounded towards negative infinity.
    Integer floor_div(Integer const& a, Integer const& b) {
      Integer q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // IntMatrix
  ////////////////////////////////////////////////////////////////////////

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> const& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("matrix rows have different lengths");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return {_data.begin() + static_cast<std::ptrdiff_t>(i * _cols),
            _data.begin() + static_cast<std::ptrdiff_t>((i + 1) * _cols)};
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
    if (_cols != other._rows) {
      throw std::invalid_argument("matrix dimensions do not match");
    }
    IntMatrix out(_rows, other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Integer const& a = at(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          out.at(i, j) += a * other.at(k, j);
        }
      }
    }
    return out;
  }

  bool IntMatrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (at(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      std::swap(at(a, j), at(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      std::swap(at(i, a), at(i, b));
    }
  }

  void IntMatrix::add_row(std::size_t dst, std::size_t src, Integer const& q) {
    if (q == 0) {
      return;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      if (at(src, j) != 0) {
        at(dst, j) += q * at(src, j);
      }
    }
  }

  void IntMatrix::add_col(std::size_t dst, std::size_t src, Integer const& q) {
    if (q == 0) {
      return;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      if (at(i, src) != 0) {
        at(i, dst) += q * at(i, src);
      }
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < _cols; ++j) {
      at(i, j) = -at(i, j);
    }
  }

  void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < _rows; ++i) {
      at(i, j) = -at(i, j);
    }
  }

  Integer determinant(IntMatrix const& input) {
    if (input.rows() != input.cols()) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t const n = input.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix m    = input;
    Integer   prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m.at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m.at(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        m.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        }
      }
      prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  SmithForm smith_normal_form(IntMatrix const& input) {
    std::size_t const r = input.rows();
    std::size_t const c = input.cols();
    IntMatrix         a = input;
    SmithForm         out{IntMatrix::identity(r), IntMatrix::identity(r), IntMatrix::identity(c),
                  IntMatrix::identity(c), {}, 0};
    // Every row operation on a is mirrored on u (and inversely on u_inv), every
    // column operation on v (and inversely on v_inv), keeping u a v = current a.
    auto add_row = [&](std::size_t dst, std::size_t src, Integer const& q) {
      a.add_row(dst, src, q);
      out.u.add_row(dst, src, q);
      out.u_inv.add_col(src, dst, -q);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, Integer const& q) {
      a.add_col(dst, src, q);
      out.v.add_col(dst, src, q);
      out.v_inv.add_row(src, dst, -q);
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
      a.swap_rows(x, y);
      out.u.swap_rows(x, y);
      out.u_inv.swap_cols(x, y);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
      a.swap_cols(x, y);
      out.v.swap_cols(x, y);
      out.v_inv.swap_rows(x, y);
    };

    std::size_t const k = std::min(r, c);
    std::size_t       t = 0;
    for (; t < k; ++t) {
      bool empty = false;
      while (true) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        std::size_t pi = r, pj = c;
        bool unit = false;
        for (std::size_t i = t; i < r && !unit; ++i) {
          for (std::size_t j = t; j < c; ++j) {
            if (a.at(i, j) != 0 && (pi == r || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
              pi   = i;
              pj   = j;
              unit = abs(a.at(i, j)) == 1;
              if (unit) {
                break;
              }
            }
          }
        }
        if (pi == r) {
          empty = true;
          break;
        }
        swap_rows(t, pi);
        swap_cols(t, pj);
        Integer const p     = a.at(t, t);
        bool          clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (a.at(i, t) != 0) {
            add_row(i, t, -(a.at(i, t) / p));
            clean = clean && a.at(i, t) == 0;
          }
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a.at(t, j) != 0) {
            add_col(j, t, -(a.at(t, j) / p));
            clean = clean && a.at(t, j) == 0;
          }
        }
        if (!clean) {
          continue;
        }
        // Divisibility: fold a row with an entry the pivot does not divide.
        std::size_t bad = r;
        for (std::size_t i = t + 1; i < r && bad == r; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (a.at(i, j) % p != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad == r) {
          break;
        }
        add_row(t, bad, 1);
      }
      if (empty) {
        break;
      }
      if (a.at(t, t) < 0) {
        a.negate_row(t);
        out.u.negate_row(t);
        out.u_inv.negate_col(t);
      }
    }
    out.rank = t;
    out.diagonal.assign(k, 0);
    for (std::size_t i = 0; i < t; ++i) {
      out.diagonal[i] = a.at(i, i);
    }
    return out;
  }

  std::vector<std::vector<Integer>> left_kernel(IntMatrix const& m) {
    auto const                        snf = smith_normal_form(m);
    std::vector<std::vector<Integer>> out;
    for (std::size_t i = snf.rank; i < m.rows(); ++i) {
      out.push_back(snf.u.row(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice
  ////////////////////////////////////////////////////////////////////////

  std::size_t Lattice::reduce(std::vector<Integer>& v) const {
    for (std::size_t col = 0; col < _dim; ++col) {
      if (v[col] == 0) {
        continue;
      }
      auto const it = _rows.find(col);
      if (it == _rows.end() || v[col] % it->second[col] != 0) {
        return col;
      }
      Integer const q = v[col] / it->second[col];
      for (std::size_t j = col; j < _dim; ++j) {
        if (it->second[j] != 0) {
          v[j] -= q * it->second[j];
        }
      }
    }
    return _dim;
  }

  bool Lattice::contains(std::vector<Integer> v) const {
    if (v.size() != _dim) {
      throw std::invalid_argument("lattice vector has the wrong length");
    }
    return reduce(v) == _dim;
  }

  bool Lattice::insert(std::vector<Integer> v) {
    if (v.size() != _dim) {
      throw std::invalid_argument("lattice vector has the wrong length");
    }
    std::size_t col = reduce(v);
    if (col == _dim) {
      return false;
    }
    while (col < _dim) {
      auto it = _rows.find(col);
      if (it == _rows.end()) {
        if (v[col] < 0) {
          for (auto& e : v) {
            e = -e;
          }
        }
        _rows.emplace(col, std::move(v));
        return true;
      }
      auto&          row = it->second;
      Integer const  a   = row[col];
      // Shrink v[col] below the pivot first, then merge by an extended gcd
      // step; [[x, y], [b/g, -a/g]] is unimodular.
      Integer const q = floor_div(v[col], a);
      for (std::size_t j = col; j < _dim; ++j) {
        if (row[j] != 0) {
          v[j] -= q * row[j];
        }
      }
      Integer const b = v[col];
      if (b != 0) {
        Integer g, x, y;
        extended_gcd(a, b, g, x, y);
        Integer const ag = a / g, bg = b / g;
        std::vector<Integer> merged(_dim), rest(_dim);
        for (std::size_t j = col; j < _dim; ++j) {
          merged[j] = x * row[j] + y * v[j];
          rest[j]   = bg * row[j] - ag * v[j];
        }
        row = std::move(merged);
        v   = std::move(rest);
      }
      col = reduce(v);
    }
    return true;
  }

  bool Lattice::insert_sparse(std::map<std::size_t, Integer> const& v) {
    std::vector<Integer> dense(_dim);
    for (auto const& [j, e] : v) {
      dense.at(j) = e;
    }
    return insert(std::move(dense));
  }

  IntMatrix Lattice::basis() const {
    std::vector<std::pair<std::size_t, std::vector<Integer>>> rows(_rows.begin(), _rows.end());
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = rows.size(); k-- > 0;) {
      auto const& [pcol, prow] = rows[k];
      for (std::size_t i = 0; i < k; ++i) {
        auto&         target = rows[i].second;
        Integer const q      = floor_div(target[pcol], prow[pcol]);
        if (q != 0) {
          for (std::size_t j = pcol; j < _dim; ++j) {
            target[j] -= q * prow[j];
          }
        }
      }
    }
    IntMatrix out(rows.size(), _dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        out.at(i, j) = rows[i].second[j];
      }
    }
    return out;
  }

  std::string to_string(Integer const& v) {
    return v.str();
  }

}  // namespace kprime
