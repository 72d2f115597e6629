#include "orbicell/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace orbicell {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::InternalError, "integer overflow in lattice arithmetic");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::InternalError, "integer overflow in lattice arithmetic");
  return r;
}

namespace {

void row_axpy(Row& target, const Row& source, long long q) {
  for (std::size_t j = 0; j < target.size(); ++j)
    target[j] = checked_add(target[j], checked_mul(-q, source[j]));
}

// Smith normal form with optional column-transform tracking (V such that
// the kernel of the input is spanned by the trailing columns of V).
std::vector<long long> snf_core(Mat& a, Mat* v) {
  const int r = static_cast<int>(a.size());
  const int c = r ? static_cast<int>(a[0].size()) : 0;
  auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
    if (v)
      for (auto& row : *v) std::swap(row[i], row[j]);
  };
  auto col_axpy = [&](int target, int source, long long q) {
    for (int k = 0; k < r; ++k)
      a[k][target] = checked_add(a[k][target], checked_mul(-q, a[k][source]));
    if (v)
      for (auto& row : *v)
        row[target] = checked_add(row[target], checked_mul(-q, row[source]));
  };

  std::vector<long long> diag;
  int t = 0;
  while (t < r && t < c) {
    // locate the smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (a[i][j] != 0 &&
            (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        if (q != 0) row_axpy(a[i], a[t], q);
        if (a[i][t] != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        if (q != 0) col_axpy(j, t, q);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (int i = t + 1; i < r && clean; ++i)
          for (int j = t + 1; j < c && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int k = 0; k < c; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
              clean = false;
            }
      }
    }
    if (a[t][t] < 0)
      for (int k = 0; k < c; ++k) a[t][k] = -a[t][k];
    diag.push_back(a[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<long long> smith_normal_form(Mat m) {
  std::vector<long long> diag = snf_core(m, nullptr);
  std::vector<long long> out;
  for (long long d : diag)
    if (d != 0) out.push_back(d);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (long long d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup abelian_invariants(int num_gens, const Mat& relators) {
  for (const Row& r : relators)
    if (static_cast<int>(r.size()) != num_gens)
      fail(ErrorKind::InvalidInput, "relator width mismatch");
  AbelianGroup g;
  std::vector<long long> factors = smith_normal_form(relators);
  g.rank = num_gens - static_cast<int>(factors.size());
  for (long long d : factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

Mat row_lattice_normal_form(Mat m, int width) {
  for (Row& r : m)
    if (static_cast<int>(r.size()) != width) fail(ErrorKind::InvalidInput, "row width mismatch");
  int top = 0;
  for (int col = 0; col < width && top < static_cast<int>(m.size()); ++col) {
    // gcd elimination within the column
    while (true) {
      int best = -1;
      for (int i = top; i < static_cast<int>(m.size()); ++i)
        if (m[i][col] != 0 && (best < 0 || std::llabs(m[i][col]) < std::llabs(m[best][col])))
          best = i;
      if (best < 0) break;
      std::swap(m[top], m[best]);
      bool cleared = true;
      for (int i = top + 1; i < static_cast<int>(m.size()); ++i) {
        if (m[i][col] == 0) continue;
        long long q = m[i][col] / m[top][col];
        row_axpy(m[i], m[top], q);
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (top < static_cast<int>(m.size()) && m[top][col] != 0) {
      if (m[top][col] < 0)
        for (long long& x : m[top]) x = -x;
      for (int i = 0; i < top; ++i) {
        long long q = m[i][col] / m[top][col];
        if (m[i][col] % m[top][col] < 0) --q;  // floor division keeps entries canonical
        if (q != 0) row_axpy(m[i], m[top], q);
      }
      ++top;
    }
  }
  m.resize(top);
  return m;
}

bool lattices_equal(const Mat& a, const Mat& b, int width) {
  return row_lattice_normal_form(a, width) == row_lattice_normal_form(b, width);
}

bool lattice_contains(const Mat& lattice, const Row& v, int width) {
  Mat nf = row_lattice_normal_form(lattice, width);
  Row x = v;
  std::size_t row = 0;
  for (int col = 0; col < width; ++col) {
    if (row < nf.size() && nf[row][col] != 0) {
      if (x[col] % nf[row][col] != 0) return false;
      row_axpy(x, nf[row], x[col] / nf[row][col]);
      ++row;
    }
    if (x[col] != 0) return false;
  }
  return true;
}

Mat left_kernel(const Mat& m, int width) {
  const int rows = static_cast<int>(m.size());
  // transpose: kernel of x -> x*m equals column-kernel of m^T
  Mat t(width, Row(rows, 0));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[i].size()) != width) fail(ErrorKind::InvalidInput, "row width mismatch");
    for (int j = 0; j < width; ++j) t[j][i] = m[i][j];
  }
  Mat v(rows, Row(rows, 0));
  for (int i = 0; i < rows; ++i) v[i][i] = 1;
  std::vector<long long> diag = snf_core(t, &v);
  int rank = 0;
  for (long long d : diag)
    if (d != 0) ++rank;
  Mat kernel;
  for (int j = rank; j < rows; ++j) {
    Row basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = v[i][j];
    kernel.push_back(std::move(basis));
  }
  return kernel;
}

AbelianMapReport abelian_map_report(int m, const Mat& source_relators, int n,
                                    const Mat& target_relators, const Mat& images) {
  if (static_cast<int>(images.size()) != m)
    fail(ErrorKind::InvalidInput, "abelian map needs one image row per source generator");
  AbelianMapReport rep;
  rep.source = abelian_invariants(m, source_relators);
  rep.target = abelian_invariants(n, target_relators);

  // Well-definedness: every source relator must map into the target lattice.
  for (const Row& r : source_relators) {
    Row img(n, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) img[j] = checked_add(img[j], checked_mul(r[i], images[i][j]));
    if (!lattice_contains(target_relators, img, n))
      fail(ErrorKind::InternalError, "abelian map is not well defined on a relator");
  }

  // Kernel lattice: x with x*images in rowlat(target_relators); stack and
  // project the left kernel onto the source coordinates.
  Mat stacked = images;
  for (const Row& r : target_relators) stacked.push_back(r);
  Mat ker = left_kernel(stacked, n);
  Mat projected;
  for (const Row& k : ker) projected.push_back(Row(k.begin(), k.begin() + m));
  rep.injective = true;
  Mat src_nf = row_lattice_normal_form(source_relators, m);
  for (const Row& k : projected)
    if (!lattice_contains(src_nf, k, m)) {
      rep.injective = false;
      break;
    }

  Mat coker_rows = target_relators;
  for (const Row& r : images) coker_rows.push_back(r);
  rep.cokernel = abelian_invariants(n, coker_rows);
  return rep;
}

}  // namespace orbicell
