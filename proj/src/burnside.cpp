#include "greenfn/burnside.hpp"

#include <algorithm>
#include <unordered_map>

namespace green::burnside {

using weyl::ConjugacyClasses;
using weyl::RootSystem;

namespace {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

struct PermHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Solves S x = y where the columns of S span a space containing y.
Vec solve_in_span(Mat s /*k x d*/, Vec y) {
  size_t k = s.size(), d = s[0].size();
  for (size_t i = 0; i < k; ++i) s[i].push_back(y[i]);
  size_t row = 0;
  std::vector<int> pivot_col(d, -1);
  for (size_t col = 0; col < d && row < k; ++col) {
    size_t p = row;
    while (p < k && s[p][col] == 0) ++p;
    if (p == k) continue;
    std::swap(s[p], s[row]);
    Rat inv = 1 / s[row][col];
    for (auto& x : s[row]) x *= inv;
    for (size_t r = 0; r < k; ++r) {
      if (r == row || s[r][col] == 0) continue;
      Rat f = s[r][col];
      for (size_t c = 0; c <= d; ++c) s[r][c] -= f * s[row][c];
    }
    pivot_col[col] = int(row);
    ++row;
  }
  Vec x(d, Rat(0));
  for (size_t col = 0; col < d; ++col)
    if (pivot_col[col] >= 0) x[col] = s[size_t(pivot_col[col])][d];
  for (size_t r = row; r < k; ++r)
    if (s[r][d] != 0) throw ValidationError("vector not in span during table computation");
  return x;
}

Rat det(Mat m) {
  size_t n = m.size();
  Rat d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(m[p], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

Poly char_poly(const Mat& m) {
  size_t n = m.size();
  std::vector<std::pair<Rat, Rat>> pts;
  for (size_t t = 0; t <= n; ++t) {
    Mat a = m;
    for (size_t i = 0; i < n; ++i) a[i][i] -= Rat(long(t));
    pts.emplace_back(Rat(long(t)), det(a));  // det(M - tI)
  }
  return interpolate(pts);
}

std::vector<Vec> nullspace(Mat m) {
  size_t rows = m.size(), cols = m[0].size();
  std::vector<int> pivot_of_col(cols, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = int(row);
    ++row;
  }
  std::vector<Vec> basis;
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec v(cols, Rat(0));
    v[col] = 1;
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[size_t(pivot_of_col[c])][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RawTable compute_table(const RootSystem& rs) {
  RawTable out;
  out.classes = weyl::conjugacy_classes(rs);
  const auto& cc = out.classes;
  const size_t k = cc.classes.size();
  const size_t n = cc.elements.size();

  std::unordered_map<std::vector<uint16_t>, uint32_t, PermHash> index;
  index.reserve(2 * n);
  for (uint32_t i = 0; i < uint32_t(n); ++i) index.emplace(cc.elements[i].perm, i);

  std::vector<size_t> inv_class(k);
  for (size_t c = 0; c < k; ++c) {
    auto invrep = weyl::inverse(rs, cc.classes[c].representative);
    inv_class[c] = cc.class_of[index.at(invrep.perm)];
  }

  // class-sum structure constants: K_i K_j = sum_l a[i][j][l] K_l
  std::vector<std::vector<std::vector<long long>>> a(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  {
    const int nroots = rs.root_count();
    std::vector<uint16_t> prod((size_t(nroots)));
    for (uint32_t x = 0; x < uint32_t(n); ++x) {
      const auto& px = cc.elements[x].perm;
      uint32_t cx = cc.class_of[x];
      for (uint32_t y = 0; y < uint32_t(n); ++y) {
        const auto& py = cc.elements[y].perm;
        for (int r = 0; r < nroots; ++r) prod[size_t(r)] = px[py[size_t(r)]];
        a[cx][cc.class_of[y]][cc.class_of[index.at(prod)]]++;
      }
    }
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < k; ++l) {
          long long sz = cc.classes[l].size.get_si();
          if (a[i][j][l] % sz != 0) throw ValidationError("inconsistent class-sum constants");
          a[i][j][l] /= sz;
        }
  }

  // Split the joint eigenbasis of B_i[j][l] = a[i][j][l]; the common
  // eigenvectors are (|C_j| chi(c_j)/chi(1))_j with integer eigenvalues.
  std::vector<Mat> subspaces;
  {
    Mat whole(k, Vec(k, Rat(0)));
    for (size_t i = 0; i < k; ++i) whole[i][i] = 1;
    subspaces.push_back(std::move(whole));  // rows are basis vectors
  }
  for (size_t i = 1; i < k; ++i) {
    bool all_done = true;
    for (auto& s : subspaces)
      if (s.size() > 1) all_done = false;
    if (all_done) break;

    Mat bi(k, Vec(k, Rat(0)));
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < k; ++l) bi[j][l] = Rat((long)a[i][j][l]);

    std::vector<Mat> next;
    for (auto& s : subspaces) {
      size_t d = s.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Mat basis_cols(k, Vec(d));  // k x d, columns are the basis vectors
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < k; ++c) basis_cols[c][r] = s[r][c];
      Mat restricted(d, Vec(d, Rat(0)));
      for (size_t r = 0; r < d; ++r) {
        Vec img(k, Rat(0));
        for (size_t j = 0; j < k; ++j)
          for (size_t l = 0; l < k; ++l)
            if (s[r][l] != 0 && bi[j][l] != 0) img[j] += bi[j][l] * s[r][l];
        Vec coords = solve_in_span(basis_cols, img);
        for (size_t c = 0; c < d; ++c) restricted[c][r] = coords[c];
      }
      Poly cp = char_poly(restricted);
      long bound = cc.classes[i].size.get_si();
      std::vector<long> roots;
      for (long lam = -bound; lam <= bound; ++lam)
        if (cp.eval(Rat(lam)) == 0) roots.push_back(lam);
      for (long lam : roots) {
        Mat shifted = restricted;
        for (size_t t = 0; t < d; ++t) shifted[t][t] -= Rat(lam);
        auto null_b = nullspace(shifted);
        if (null_b.empty()) continue;
        Mat sub;
        for (auto& v : null_b) {
          Vec lifted(k, Rat(0));
          for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < k; ++c) lifted[c] += v[r] * s[r][c];
          sub.push_back(std::move(lifted));
        }
        next.push_back(std::move(sub));
      }
    }
    subspaces = std::move(next);
  }
  if (subspaces.size() != k)
    throw ValidationError("character-table splitting did not reach " + std::to_string(k) +
                          " one-dimensional eigenspaces");

  size_t id_class = cc.class_of[0];  // identity is element 0 of the enumeration
  Int w_order = Int(long(n));
  for (auto& s : subspaces) {
    Vec v = s[0];
    if (v[id_class] == 0) throw ValidationError("eigenvector vanishes on the identity class");
    Rat scale = 1 / v[id_class];
    for (auto& x : v) x *= scale;  // v[j] = |C_j| chi(c_j) / chi(1)
    Rat inv_sq(0);                 // becomes |W| / chi(1)^2
    for (size_t j = 0; j < k; ++j) inv_sq += v[j] * v[inv_class[j]] / Rat(cc.classes[j].size);
    Rat dim_sq = Rat(w_order) / inv_sq;
    Int d2 = to_int(dim_sq);
    Int dim = sqrt(d2);
    if (dim * dim != d2) throw ValidationError("character degree is not an integer");
    std::vector<Int> row(k);
    for (size_t j = 0; j < k; ++j) row[j] = to_int(v[j] * Rat(dim) / Rat(cc.classes[j].size));
    out.dims.push_back(int(dim.get_si()));
    out.values.push_back(std::move(row));
  }

  {
    std::vector<size_t> order(k);
    for (size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      if (out.dims[x] != out.dims[y]) return out.dims[x] < out.dims[y];
      return out.values[x] < out.values[y];
    });
    std::vector<std::vector<Int>> nv;
    std::vector<int> nd;
    for (size_t i : order) {
      nv.push_back(out.values[i]);
      nd.push_back(out.dims[i]);
    }
    out.values = std::move(nv);
    out.dims = std::move(nd);
  }

  // Fake degrees: R_chi(t) = prod_i (1 - t^{d_i}) * (1/|W|) sum_w chi(w)/det_V(1 - t w),
  // exact evaluation at integer points followed by interpolation.
  auto pd = weyl::poincare(rs);
  int npts = rs.positive_count + 2;
  std::vector<Rat> tvals;
  for (int t = 2; int(tvals.size()) < npts; ++t) tvals.emplace_back(t);

  std::vector<std::vector<Rat>> class_det(k, std::vector<Rat>(size_t(npts)));
  for (size_t c = 0; c < k; ++c) {
    const auto& w = cc.classes[c].representative;
    for (int ti = 0; ti < npts; ++ti) {
      Mat m(size_t(rs.rank), Vec(size_t(rs.rank), Rat(0)));
      for (int j = 0; j < rs.rank; ++j) {
        const auto& img = rs.roots[w.perm[rs.simple_root(j)]];
        for (int i2 = 0; i2 < rs.rank; ++i2)
          m[size_t(i2)][size_t(j)] = -tvals[size_t(ti)] * Rat(img[i2]);
        m[size_t(j)][size_t(j)] += 1;
      }
      class_det[c][size_t(ti)] = det(m);
    }
  }
  Poly prod_poly(Rat(1));
  for (int d : pd.degrees) prod_poly = prod_poly * (Poly(Rat(1)) - Poly::monomial(Rat(1), size_t(d)));

  for (size_t ch = 0; ch < k; ++ch) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (int ti = 0; ti < npts; ++ti) {
      Rat sum(0);
      for (size_t c = 0; c < k; ++c)
        sum += Rat(cc.classes[c].size) * Rat(out.values[ch][c]) / class_det[c][size_t(ti)];
      pts.emplace_back(tvals[size_t(ti)], prod_poly.eval(tvals[size_t(ti)]) * sum / Rat(w_order));
    }
    Poly fd = interpolate(pts);
    if (fd.degree() > rs.positive_count) throw ValidationError("fake degree exceeds N");
    int b = -1;
    for (int i = 0; i <= fd.degree(); ++i)
      if (fd.coeff(size_t(i)) != 0) {
        b = i;
        break;
      }
    if (b < 0) throw ValidationError("zero fake degree");
    out.fake_degrees.push_back(fd);
    out.b_invariant.push_back(b);
  }
  return out;
}

}  // namespace green::burnside
