#include "cartanfree/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cartanfree/errors.hpp"

namespace cartanfree {

Root Root::operator-() const {
  Root out = *this;
  for (int& v : out.coords) v = -v;
  return out;
}

Root Root::operator+(const Root& rhs) const {
  if (coords.size() != rhs.coords.size()) throw InputError("root length mismatch");
  Root out = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += rhs.coords[i];
  return out;
}

bool Root::is_zero() const {
  for (int v : coords) {
    if (v != 0) return false;
  }
  return true;
}

long Root::inner(const Root& rhs) const {
  if (coords.size() != rhs.coords.size()) throw InputError("root length mismatch");
  long acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    acc += static_cast<long>(coords[i]) * rhs.coords[i];
  }
  return acc;
}

Rational Root::apply(const std::vector<Rational>& h_coords) const {
  if (h_coords.size() != coords.size()) throw InputError("root length mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < coords.size(); ++i) acc += coords[i] * h_coords[i];
  return acc;
}

std::string Root::label() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int a = coords[i];
    if (a == 0) continue;
    if (!out.empty() && a > 0) out += "+";
    if (a < 0) out += "-";
    const int mag = a < 0 ? -a : a;
    if (mag != 1) out += std::to_string(mag);
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Root parse_root(const std::string& text, int n) {
  std::vector<int> coords(n, 0);
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    std::size_t d0 = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    long mult = (i > d0) ? std::stol(text.substr(d0, i - d0)) : 1;
    if (i >= text.size() || text[i] != 'e') throw InputError("bad root expression: " + text);
    ++i;
    d0 = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == d0) throw InputError("bad root expression: " + text);
    const int idx = std::stoi(text.substr(d0, i - d0));
    if (idx < 1 || idx > n) throw InputError("root index out of range in: " + text);
    coords[idx - 1] += sign * static_cast<int>(mult);
    any = true;
  }
  if (!any) throw InputError("empty root expression");
  return Root{coords};
}

int SpBasis::matrix_size() const { return elements_.empty() ? 0 : elements_[0].matrix.rows(); }

namespace {

RatMatrix unit_matrix(int size, int r, int c, const Rational& v) {
  RatMatrix m(size, size);
  m.at(r, c) = v;
  return m;
}

}  // namespace

SpBasis SpBasis::sp2n(int n) {
  if (n < 1) throw InputError("sp(2n) requires n >= 1");
  SpBasis b;
  b.kind_ = AlgebraKind::SpTypeC;
  b.n_ = n;
  const int size = 2 * n;

  auto add_root_element = [&](const Root& alpha, RatMatrix m, int lr, int lc,
                              const Rational& lead) {
    BasisElement el;
    el.label = "X(" + alpha.label() + ")";
    el.root = alpha;
    el.matrix = std::move(m);
    el.lead_row = lr;
    el.lead_col = lc;
    el.lead_coeff = lead;
    b.root_index_[alpha.coords] = static_cast<int>(b.elements_.size());
    b.roots_.push_back(alpha);
    b.elements_.push_back(std::move(el));
  };

  auto root_at = [&](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> coords(n, 0);
    for (auto [idx, val] : entries) coords[idx] += val;
    return Root{coords};
  };

  // 0-based i, j throughout; matrices follow the fixed normalization.
  for (int i = 0; i < n; ++i) {
    add_root_element(root_at({{i, 2}}), unit_matrix(size, i, n + i, rat(2)), i, n + i, rat(2));
  }
  for (int i = 0; i < n; ++i) {
    add_root_element(root_at({{i, -2}}), unit_matrix(size, n + i, i, rat(-2)), n + i, i, rat(-2));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatMatrix m(size, size);
      m.at(i, n + j) = 1;
      m.at(j, n + i) = 1;
      add_root_element(root_at({{i, 1}, {j, 1}}), std::move(m), i, n + j, rat(1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatMatrix m(size, size);
      m.at(n + i, j) = -1;
      m.at(n + j, i) = -1;
      add_root_element(root_at({{i, -1}, {j, -1}}), std::move(m), n + i, j, rat(-1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RatMatrix m(size, size);
      m.at(i, j) = 1;
      m.at(n + j, n + i) = -1;
      add_root_element(root_at({{i, 1}, {j, -1}}), std::move(m), i, j, rat(1));
    }
  }
  for (int i = 0; i < n; ++i) {
    BasisElement el;
    el.label = "h" + std::to_string(i + 1);
    el.root = std::nullopt;
    RatMatrix m(size, size);
    m.at(i, i) = 1;
    m.at(n + i, n + i) = -1;
    el.matrix = std::move(m);
    el.lead_row = i;
    el.lead_col = i;
    el.lead_coeff = 1;
    b.cartan_index_.push_back(static_cast<int>(b.elements_.size()));
    b.elements_.push_back(std::move(el));
  }
  return b;
}

SpBasis SpBasis::sl2_fixture() {
  SpBasis b;
  b.kind_ = AlgebraKind::Sl2Fixture;
  b.n_ = 1;

  BasisElement e;
  e.label = "e";
  e.root = Root{{1}};
  e.matrix = unit_matrix(2, 0, 1, rat(1));
  e.lead_row = 0;
  e.lead_col = 1;
  e.lead_coeff = 1;
  b.root_index_[{1}] = 0;
  b.roots_.push_back(Root{{1}});
  b.elements_.push_back(std::move(e));

  BasisElement f;
  f.label = "f";
  f.root = Root{{-1}};
  f.matrix = unit_matrix(2, 1, 0, rat(1));
  f.lead_row = 1;
  f.lead_col = 0;
  f.lead_coeff = 1;
  b.root_index_[{-1}] = 1;
  b.roots_.push_back(Root{{-1}});
  b.elements_.push_back(std::move(f));

  BasisElement h;
  h.label = "h";
  h.root = std::nullopt;
  RatMatrix hm(2, 2);
  hm.at(0, 0) = rat(1, 2);
  hm.at(1, 1) = rat(-1, 2);
  h.matrix = std::move(hm);
  h.lead_row = 0;
  h.lead_col = 0;
  h.lead_coeff = rat(1, 2);
  b.cartan_index_.push_back(2);
  b.elements_.push_back(std::move(h));

  return b;
}

bool SpBasis::is_root(const Root& alpha) const {
  return root_index_.count(alpha.coords) > 0;
}

int SpBasis::index_of_root(const Root& alpha) const {
  auto it = root_index_.find(alpha.coords);
  return it == root_index_.end() ? -1 : it->second;
}

int SpBasis::cartan_index(int i) const {
  if (i < 0 || i >= n_) throw InputError("Cartan index out of range");
  return cartan_index_[i];
}

int SpBasis::index_of_label(const std::string& label) const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].label == label) return static_cast<int>(k);
  }
  return -1;
}

std::optional<std::vector<Rational>> SpBasis::expand(const RatMatrix& m) const {
  if (m.rows() != matrix_size() || m.cols() != matrix_size()) {
    throw InputError("matrix size mismatch for this algebra");
  }
  std::vector<Rational> coords(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    coords[k] = m.at(elements_[k].lead_row, elements_[k].lead_col) / elements_[k].lead_coeff;
  }
  if (from_coords(coords) != m) return std::nullopt;
  return coords;
}

RatMatrix SpBasis::from_coords(const std::vector<Rational>& coords) const {
  if (coords.size() != elements_.size()) throw InputError("coordinate vector length mismatch");
  RatMatrix acc(matrix_size(), matrix_size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    acc = acc + elements_[k].matrix.scaled(coords[k]);
  }
  return acc;
}

std::vector<Rational> SpBasis::bracket_expand(int a, int b) const {
  const RatMatrix& x = elements_[a].matrix;
  const RatMatrix& y = elements_[b].matrix;
  auto coords = expand(x * y - y * x);
  if (!coords) throw InternalError("bracket of basis elements left the algebra");
  return *coords;
}

std::vector<Rational> SpBasis::bracket(const RatMatrix& x, const RatMatrix& y) const {
  if (!expand(x) || !expand(y)) throw InputError("bracket operand is not a member of the algebra");
  auto coords = expand(x * y - y * x);
  if (!coords) throw InternalError("bracket left the algebra");
  return *coords;
}

bool SpBasis::satisfies_symplectic_condition(const RatMatrix& m) const {
  const int nn = matrix_size() / 2;
  RatMatrix s(matrix_size(), matrix_size());
  for (int i = 0; i < nn; ++i) {
    s.at(i, nn + i) = 1;
    s.at(nn + i, i) = -1;
  }
  return s * m == -(m.transpose() * s);
}

bool SpBasis::root_lattice_contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("vector length mismatch");
  long parity = 0;
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
    if (kind_ == AlgebraKind::SpTypeC) parity += to_long(x);
  }
  if (kind_ == AlgebraKind::SpTypeC && ((parity % 2) + 2) % 2 != 0) return false;
  return true;
}

AutomorphismTable::AutomorphismTable(std::shared_ptr<const SpBasis> basis,
                                     std::vector<std::vector<Rational>> images)
    : basis_(std::move(basis)), images_(std::move(images)) {
  const SpBasis& b = *basis_;
  if (images_.size() != b.elements().size()) throw InternalError("automorphism table size mismatch");
  // invertibility of the coordinate matrix
  const int m = b.dim();
  RatMatrix t(m, m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) t.at(j, k) = images_[k][j];
  }
  if (!t.inverse()) throw InputError("automorphism table is not invertible");
  if (!preserves_brackets()) throw InputError("map does not preserve brackets");
  // h-stability: Cartan images supported on Cartan elements
  h_stable_ = true;
  for (int i = 0; i < b.n(); ++i) {
    const auto& img = images_[b.cartan_index(i)];
    for (int k = 0; k < m; ++k) {
      if (b.element(k).root.has_value() && sgn(img[k]) != 0) {
        h_stable_ = false;
        break;
      }
    }
  }
}

AutomorphismTable AutomorphismTable::identity(std::shared_ptr<const SpBasis> basis) {
  const int m = basis->dim();
  std::vector<std::vector<Rational>> images(m, std::vector<Rational>(m, Rational(0)));
  for (int k = 0; k < m; ++k) images[k][k] = 1;
  return AutomorphismTable(std::move(basis), std::move(images));
}

AutomorphismTable AutomorphismTable::conjugation(std::shared_ptr<const SpBasis> basis,
                                                 const RatMatrix& u) {
  auto u_inv = u.inverse();
  if (!u_inv) throw InputError("conjugating matrix is singular");
  std::vector<std::vector<Rational>> images;
  images.reserve(basis->dim());
  for (const auto& el : basis->elements()) {
    auto coords = basis->expand(u * el.matrix * *u_inv);
    if (!coords) throw InputError("conjugation does not normalize the algebra");
    images.push_back(std::move(*coords));
  }
  return AutomorphismTable(std::move(basis), std::move(images));
}

AutomorphismTable AutomorphismTable::diagonal(std::shared_ptr<const SpBasis> basis,
                                              const std::vector<Rational>& c) {
  auto scalars = diag_twist_scalars(*basis, c);
  const int m = basis->dim();
  std::vector<std::vector<Rational>> images(m, std::vector<Rational>(m, Rational(0)));
  for (int k = 0; k < m; ++k) {
    const auto& el = basis->element(k);
    images[k][k] = el.root ? scalars.at(*el.root) : Rational(1);
  }
  return AutomorphismTable(std::move(basis), std::move(images));
}

bool AutomorphismTable::preserves_brackets() const {
  const SpBasis& b = *basis_;
  const int m = b.dim();
  std::vector<RatMatrix> image_mats;
  image_mats.reserve(m);
  for (int k = 0; k < m; ++k) image_mats.push_back(b.from_coords(images_[k]));
  for (int a = 0; a < m; ++a) {
    for (int c = a + 1; c < m; ++c) {
      const auto bracket_coords = b.bracket_expand(a, c);
      // tau([B_a, B_c])
      std::vector<Rational> lhs(m, Rational(0));
      for (int k = 0; k < m; ++k) {
        if (sgn(bracket_coords[k]) == 0) continue;
        for (int j = 0; j < m; ++j) lhs[j] += bracket_coords[k] * images_[k][j];
      }
      // [tau(B_a), tau(B_c)]
      const RatMatrix& x = image_mats[a];
      const RatMatrix& y = image_mats[c];
      auto rhs = b.expand(x * y - y * x);
      if (!rhs) return false;
      for (int j = 0; j < m; ++j) {
        if (cmp(lhs[j], (*rhs)[j]) != 0) return false;
      }
    }
  }
  return true;
}

AutomorphismTable AutomorphismTable::compose(const AutomorphismTable& inner) const {
  if (basis_->dim() != inner.basis_->dim() || basis_->kind() != inner.basis_->kind()) {
    throw InputError("automorphism bases differ");
  }
  const int m = basis_->dim();
  std::vector<std::vector<Rational>> images(m, std::vector<Rational>(m, Rational(0)));
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      if (sgn(inner.images_[k][j]) == 0) continue;
      for (int l = 0; l < m; ++l) images[k][l] += inner.images_[k][j] * images_[j][l];
    }
  }
  return AutomorphismTable(basis_, std::move(images));
}

RatMatrix AutomorphismTable::cartan_matrix() const {
  if (!h_stable_) throw InputError("automorphism is not h-stable");
  const int n = basis_->n();
  RatMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& img = images_[basis_->cartan_index(i)];
    for (int j = 0; j < n; ++j) w.at(j, i) = img[basis_->cartan_index(j)];
  }
  return w;
}

std::optional<std::pair<Root, Rational>> AutomorphismTable::root_image(const Root& alpha) const {
  const int idx = basis_->index_of_root(alpha);
  if (idx < 0) throw InputError("not a root of this algebra: " + alpha.label());
  const auto& img = images_[idx];
  std::optional<std::pair<Root, Rational>> found;
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (sgn(img[k]) == 0) continue;
    const auto& el = basis_->element(static_cast<int>(k));
    if (!el.root || found) return std::nullopt;
    found = {*el.root, img[k]};
  }
  return found;
}

SpBasis build_sp2n(int n) { return SpBasis::sp2n(n); }

AutomorphismTable weyl_twist_auto(std::shared_ptr<const SpBasis> basis, int k) {
  if (basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("Weyl twist is defined on the sp(2n) basis");
  }
  const int n = basis->n();
  if (k < 1 || k > n) throw InputError("Weyl twist index out of range");
  const Root long_pos{[&] {
    std::vector<int> c(n, 0);
    c[k - 1] = 2;
    return c;
  }()};
  const RatMatrix x_plus = basis->element(basis->index_of_root(long_pos)).matrix.scaled(rat(1, 2));
  const RatMatrix x_minus = basis->element(basis->index_of_root(-long_pos)).matrix.scaled(rat(-1, 2));
  const RatMatrix u =
      exp_nilpotent(x_plus) * exp_nilpotent(-x_minus) * exp_nilpotent(x_plus);
  return AutomorphismTable::conjugation(std::move(basis), u);
}

std::map<Root, Rational> diag_twist_scalars(const SpBasis& basis,
                                            const std::vector<Rational>& c) {
  if (static_cast<int>(c.size()) != basis.n()) throw InputError("scalar vector length mismatch");
  for (const auto& v : c) {
    if (sgn(v) == 0) throw InputError("diagonal twist scalars must be nonzero");
  }
  std::map<Root, Rational> out;
  for (const auto& alpha : basis.roots()) {
    Rational prod(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (alpha.coords[i] != 0) prod *= pow_int(c[i], alpha.coords[i]);
    }
    prod.canonicalize();
    out.emplace(alpha, prod);
  }
  return out;
}

CasimirElement casimir(const SpBasis& basis) {
  const int m = basis.dim();
  RatMatrix gram(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const Rational t = (basis.element(a).matrix * basis.element(b).matrix).trace();
      gram.at(a, b) = t;
      gram.at(b, a) = t;
    }
  }
  auto inv = gram.inverse();
  if (!inv) throw InternalError("trace form is degenerate");
  CasimirElement out;
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      const Rational& coeff = inv->at(c, a);
      if (sgn(coeff) == 0) continue;
      out.terms.push_back({coeff, a, c});
    }
  }
  return out;
}

}  // namespace cartanfree
