#pragma once

#include <optional>
#include <vector>

#include "ydh/cyclo.hpp"
#include "ydh/poly.hpp"

namespace ydh {

using Vec = std::vector<CycNum>;

Vec zero_vec(int n, int order);
Vec unit_vec(int n, int i, int order);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const CycNum& s, const Vec& v);

// Dense matrix over Q(zeta_N); every entry lives in the same field.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, int order);
  static Mat identity(int n, int order);
  static Mat from_columns(const std::vector<Vec>& cols, int rows, int order);
  static Mat permutation(const std::vector<int>& images, int order);  // e_i -> e_{images[i]}

  int rows() const { return r_; }
  int cols() const { return c_; }
  int order() const { return n_; }
  CycNum& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const CycNum& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
  Vec apply(const Vec& v) const;
  Vec apply_left(const Vec& row) const;  // row * M
  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  // Image list when this is a permutation matrix.
  std::optional<std::vector<int>> as_permutation() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const CycNum& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  int r_ = 0, c_ = 0, n_ = 1;
  std::vector<CycNum> d_;
};

Mat kron(const Mat& a, const Mat& b);
// v (x) w -> w (x) v on K^a (x) K^b.
Mat flip(int a, int b, int order);
Mat hstack(const Mat& a, const Mat& b);

/*
 * Structure constants T(i,j,k) in a dense cube.  By convention a
 * multiplication stores b_i b_j = sum_k T(i,j,k) b_k and a comultiplication
 * stores Delta(b_k) = sum_{i,j} T(k,i,j) b_i (x) b_j.
 */
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int a, int b, int c, int order);
  int dim(int axis) const { return axis == 0 ? a_ : (axis == 1 ? b_ : c_); }
  int order() const { return n_; }
  CycNum& operator()(int i, int j, int k) { return d_[(static_cast<size_t>(i) * b_ + j) * c_ + k]; }
  const CycNum& operator()(int i, int j, int k) const { return d_[(static_cast<size_t>(i) * b_ + j) * c_ + k]; }
  friend bool operator==(const Tensor3& x, const Tensor3& y);

 private:
  int a_ = 0, b_ = 0, c_ = 0, n_ = 1;
  std::vector<CycNum> d_;
};

struct RREF {
  Mat r;
  std::vector<int> pivots;
};

RREF rref(const Mat& m);
int rank(const Mat& m);
Mat kernel(const Mat& m);          // columns form a basis
Mat column_basis(const Mat& m);    // independent columns spanning the image
Mat solve(const Mat& a, const Mat& b);  // some X with a X = b; throws NotInSpan
Mat inverse(const Mat& m);
CycNum det(const Mat& m);
bool in_span(const Mat& basis, const Vec& v);
bool same_span(const Mat& a, const Mat& b);
// Coordinates of the columns of v in a basis with independent columns.
Mat coords(const Mat& basis, const Mat& v);

CycPoly charpoly(const Mat& m);

// Eigenvalues with algebraic multiplicity of a monomial matrix whose entries
// are roots of unity; nullopt when the fast path does not apply.
std::optional<std::vector<Root>> monomial_eigenvalues(const Mat& m);

struct EigenBlock {
  Mat basis;                 // columns in ambient coordinates
  std::vector<CycNum> values;  // generalized eigenvalue of each operator
};

// Maximal joint generalized eigenspaces of commuting operators on the span
// of `basis`, in canonical order of eigenvalue tuples.
std::vector<EigenBlock> split_invariant(const Mat& basis, const std::vector<Mat>& ops);

}  // namespace ydh
