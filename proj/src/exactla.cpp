#include "ydh/exactla.hpp"

#include <algorithm>

#include "ydh/error.hpp"

namespace ydh {

Vec zero_vec(int n, int order) { return Vec(n, CycNum(order)); }

Vec unit_vec(int n, int i, int order) {
  Vec v = zero_vec(n, order);
  v.at(i) = CycNum(order, 1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNum& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vec operator*(const CycNum& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

Mat::Mat(int rows, int cols, int order) : r_(rows), c_(cols), n_(order), d_(static_cast<size_t>(rows) * cols, CycNum(order)) {}

Mat Mat::identity(int n, int order) {
  Mat m(n, n, order);
  for (int i = 0; i < n; ++i) m(i, i) = CycNum(order, 1);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, int rows, int order) {
  Mat m(rows, static_cast<int>(cols.size()), order);
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
  return m;
}

Mat Mat::permutation(const std::vector<int>& images, int order) {
  const int n = static_cast<int>(images.size());
  Mat m(n, n, order);
  for (int i = 0; i < n; ++i) m(images[i], i) = CycNum(order, 1);
  return m;
}

Vec Mat::col(int j) const {
  Vec v;
  v.reserve(r_);
  for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vec Mat::row(int i) const { return Vec(d_.begin() + static_cast<long>(i) * c_, d_.begin() + static_cast<long>(i + 1) * c_); }

void Mat::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != r_) throw DimensionMismatch("column length");
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw DimensionMismatch("matrix-vector product");
  Vec out = zero_vec(r_, n_);
  for (int j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i) {
      const CycNum& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Vec Mat::apply_left(const Vec& row) const {
  if (static_cast<int>(row.size()) != r_) throw DimensionMismatch("vector-matrix product");
  Vec out = zero_vec(c_, n_);
  for (int i = 0; i < r_; ++i) {
    if (row[i].is_zero()) continue;
    for (int j = 0; j < c_; ++j) {
      const CycNum& a = (*this)(i, j);
      if (!a.is_zero()) out[j] += row[i] * a;
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(c_, r_, n_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const CycNum& x) { return x.is_zero(); });
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const CycNum& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::optional<std::vector<int>> Mat::as_permutation() const {
  if (r_ != c_) return std::nullopt;
  std::vector<int> img(c_, -1);
  std::vector<char> hit(r_, 0);
  for (int j = 0; j < c_; ++j) {
    for (int i = 0; i < r_; ++i) {
      const CycNum& x = (*this)(i, j);
      if (x.is_zero()) continue;
      if (!x.is_one() || img[j] >= 0 || hit[i]) return std::nullopt;
      img[j] = i;
      hit[i] = 1;
    }
    if (img[j] < 0) return std::nullopt;
  }
  return img;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product");
  Mat out(a.r_, b.c_, static_cast<int>(lcm_int(a.n_, b.n_)));
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const CycNum& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum");
  Mat out = a;
  for (size_t i = 0; i < out.d_.size(); ++i)
    if (!b.d_[i].is_zero()) out.d_[i] += b.d_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference");
  Mat out = a;
  for (size_t i = 0; i < out.d_.size(); ++i)
    if (!b.d_[i].is_zero()) out.d_[i] -= b.d_[i];
  return out;
}

Mat operator*(const CycNum& s, const Mat& a) {
  Mat out = a;
  for (auto& x : out.d_)
    if (!x.is_zero()) x *= s;
  return out;
}

bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const CycNum& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const CycNum& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Mat flip(int a, int b, int order) {
  Mat out(a * b, a * b, order);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) out(j * a + i, i * b + j) = CycNum(order, 1);
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack");
  Mat out(a.rows(), a.cols() + b.cols(), a.order());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Tensor3::Tensor3(int a, int b, int c, int order)
    : a_(a), b_(b), c_(c), n_(order), d_(static_cast<size_t>(a) * b * c, CycNum(order)) {}

bool operator==(const Tensor3& x, const Tensor3& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

RREF rref(const Mat& m) {
  RREF out{m, {}};
  Mat& a = out.r;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    CycNum inv = a(row, col).inverse();
    for (int j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      CycNum f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Mat kernel(const Mat& m) {
  RREF r = rref(m);
  std::vector<char> is_piv(m.cols(), 0);
  for (int p : r.pivots) is_piv[p] = 1;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v = zero_vec(m.cols(), m.order());
    v[free] = CycNum(m.order(), 1);
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.r(static_cast<int>(i), free);
    basis.push_back(v);
  }
  return Mat::from_columns(basis, m.cols(), m.order());
}

Mat column_basis(const Mat& m) {
  RREF r = rref(m);
  std::vector<Vec> cols;
  for (int p : r.pivots) cols.push_back(m.col(p));
  return Mat::from_columns(cols, m.rows(), m.order());
}

Mat solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve");
  RREF r = rref(hstack(a, b));
  Mat x(a.cols(), b.cols(), a.order());
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) throw NotInSpan("linear system is inconsistent");
    for (int j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.r(static_cast<int>(i), a.cols() + j);
  }
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  if (rank(m) != m.rows()) throw DivisionByZero("singular matrix");
  return solve(m, Mat::identity(m.rows(), m.order()));
}

CycNum det(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  Mat a = m;
  const int n = a.rows();
  CycNum d(m.order(), 1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return CycNum(m.order());
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    CycNum inv = a(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      CycNum f = a(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

bool in_span(const Mat& basis, const Vec& v) {
  Mat b = Mat::from_columns({v}, basis.rows(), basis.order());
  return rank(hstack(basis, b)) == rank(basis);
}

bool same_span(const Mat& a, const Mat& b) {
  int ra = rank(a);
  return ra == rank(b) && rank(hstack(a, b)) == ra;
}

Mat coords(const Mat& basis, const Mat& v) { return solve(basis, v); }

CycPoly charpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("charpoly of non-square matrix");
  const int n = m.rows();
  const int ord = m.order();
  Mat h = m;
  // reduce to upper Hessenberg form by similarity
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int i = col + 1; i < n; ++i)
      if (!h(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    CycNum inv = h(col + 1, col).inverse();
    for (int i = col + 2; i < n; ++i) {
      if (h(i, col).is_zero()) continue;
      CycNum u = h(i, col) * inv;
      for (int j = 0; j < n; ++j)
        if (!h(col + 1, j).is_zero()) h(i, j) -= u * h(col + 1, j);
      for (int r = 0; r < n; ++r)
        if (!h(r, i).is_zero()) h(r, col + 1) += u * h(r, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{k-i,k} (prod h_{j,j-1}) p_{k-i-1}, 1-based
  auto H = [&](int i, int j) -> const CycNum& { return h(i - 1, j - 1); };
  std::vector<CycPoly> p;
  p.push_back(CycPoly({CycNum(ord, 1)}));
  for (int k = 1; k <= n; ++k) {
    CycPoly pk = CycPoly::x_minus(H(k, k)) * p[k - 1];
    CycNum t(ord, 1);
    for (int i = 1; i < k; ++i) {
      t *= H(k - i + 1, k - i);
      if (t.is_zero()) break;
      CycNum c = H(k - i, k) * t;
      if (!c.is_zero()) pk = pk - CycPoly({c}) * p[k - i - 1];
    }
    p.push_back(pk);
  }
  return p[n];
}

std::optional<std::vector<Root>> monomial_eigenvalues(const Mat& m) {
  const int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  std::vector<int> img(n, -1);
  std::vector<long> logs(n, 0);
  const long big_m = lcm_int(2, m.order());
  std::vector<char> hit(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      if (img[j] >= 0 || hit[i]) return std::nullopt;
      img[j] = i;
      hit[i] = 1;
      logs[j] = root_of_unity_log(m(i, j).embed(m.order()));
      if (logs[j] < 0) return std::nullopt;
    }
    if (img[j] < 0) return std::nullopt;
  }
  std::vector<long> count(big_m, 0);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    long len = 0, a = 0;
    for (int x = s; !seen[x]; x = img[x]) {
      seen[x] = 1;
      a += logs[x];
      ++len;
    }
    a %= big_m;
    // x^len = zeta_M^a
    long found = 0;
    for (long j = 0; j < big_m; ++j)
      if ((j * len - a) % big_m == 0) {
        ++count[j];
        ++found;
      }
    if (found != len) throw NonSplitField("eigenvalues of a monomial operator leave Q(zeta_" + std::to_string(m.order()) + ")");
  }
  std::vector<Root> out;
  for (long j = 0; j < big_m; ++j)
    if (count[j]) out.push_back({root_of_unity(static_cast<int>(big_m), static_cast<int>(j), m.order()), static_cast<int>(count[j])});
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return out;
}

namespace {

Mat power(const Mat& m, int k) {
  Mat r = Mat::identity(m.rows(), m.order());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

std::vector<EigenBlock> split_invariant(const Mat& basis, const std::vector<Mat>& ops) {
  std::vector<EigenBlock> blocks{{basis, {}}};
  const int ord = basis.order();
  for (const Mat& op : ops) {
    std::vector<EigenBlock> next;
    for (const EigenBlock& blk : blocks) {
      const int k = blk.basis.cols();
      if (k == 0) continue;
      Mat x = coords(blk.basis, op * blk.basis);
      std::optional<std::vector<Root>> roots = monomial_eigenvalues(x);
      if (!roots) roots = roots_in_field(charpoly(x), ord);
      int total = 0;
      for (const Root& r : *roots) {
        Mat shifted = x - r.value * Mat::identity(k, ord);
        Mat ker = kernel(power(shifted, r.multiplicity));
        total += ker.cols();
        EigenBlock nb{blk.basis * ker, blk.values};
        nb.values.push_back(r.value);
        next.push_back(std::move(nb));
      }
      if (total != k) throw NonSplitField("characteristic polynomial does not split over Q(zeta_" + std::to_string(ord) + ")");
    }
    blocks = std::move(next);
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const EigenBlock& a, const EigenBlock& b) {
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
  });
  return blocks;
}

}  // namespace ydh
