#include "flagspec/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

using Matrix = std::vector<std::vector<int>>;

void bond(Matrix& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

Matrix cartan_matrix(LieType t) {
  const int n = t.rank;
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
      bond(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      bond(a, 0, 2, -1, -1);
      bond(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'F':
      bond(a, 0, 1, -1, -1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3, -1, -1);
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      bond(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

// Solves d_i a_ij = d_j a_ji along the (connected) Dynkin diagram, then
// rescales so the largest d_i is 1.
std::vector<Rational> symmetrize(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      stack.push_back(j);
    }
  }
  Rational top = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= top;
  return d;
}

std::vector<std::vector<Rational>> invert(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

// <beta, alpha_i^vee> for beta in simple-root coordinates.
int pair_simple(const Matrix& a, const std::vector<int>& beta, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += a[i][j] * beta[j];
  return s;
}

}  // namespace

LieType LieType::make(char family, int rank) {
  auto fail = [&](const std::string& why) -> LieType {
    throw Error(ErrorKind::invalid_argument,
                std::string("inadmissible Lie type ") + family + std::to_string(rank) + ": " + why);
  };
  switch (family) {
    case 'A': if (rank < 1) return fail("A_n requires n >= 1"); break;
    case 'B': if (rank < 2) return fail("B_n requires n >= 2"); break;
    case 'C': if (rank < 3) return fail("C_n requires n >= 3"); break;
    case 'D': if (rank < 4) return fail("D_n requires n >= 4"); break;
    case 'E': if (rank < 6 || rank > 8) return fail("E_n requires n in {6, 7, 8}"); break;
    case 'F': if (rank != 4) return fail("F_n requires n = 4"); break;
    case 'G': if (rank != 2) return fail("G_n requires n = 2"); break;
    default: return fail("family must be one of A, B, C, D, E, F, G");
  }
  return LieType{family, rank};
}

std::string LieType::name() const { return std::string(1, family) + std::to_string(rank); }

int Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), 0); }

Weight Weight::from_ints(std::initializer_list<long> coords) {
  Weight w;
  for (long c : coords) w.fw_coords.emplace_back(c);
  return w;
}

bool Weight::is_integral() const {
  return std::all_of(fw_coords.begin(), fw_coords.end(), [](const Rational& r) { return is_integer(r); });
}

bool Weight::is_dominant() const {
  return std::all_of(fw_coords.begin(), fw_coords.end(), [](const Rational& r) { return r >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < fw_coords.size(); ++i) fw_coords[i] += o.fw_coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < fw_coords.size(); ++i) fw_coords[i] -= o.fw_coords[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : fw_coords) x *= c;
  return *this;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

RootSystem build_root_system(LieType t) {
  t = LieType::make(t.family, t.rank);
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix(t);
  rs.symmetrizer_ = symmetrize(rs.cartan_);
  rs.cartan_inv_ = invert(rs.cartan_);
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan_;

  // Closure by height using root strings: for beta and simple alpha_i, with
  // p the largest k such that beta - k alpha_i is a root, beta + alpha_i is a
  // root iff p - <beta, alpha_i^vee> > 0.
  std::map<std::vector<int>, bool> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known[e] = true;
    layer.push_back(e);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pair_simple(a, beta, i) <= 0) continue;
        auto up = beta;
        up[i] += 1;
        if (known.emplace(up, true).second) next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  for (auto& c : all) {
    rs.index_[c] = rs.positive_.size();
    rs.positive_.push_back(Root{c});
  }

  // beta^vee = sum_j beta_j (d_j / d_beta) alpha_j^vee
  for (const auto& beta : rs.positive_) {
    Rational half_len = rs.root_length2(beta) / 2;
    std::vector<int> cv(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = beta.simple_coords[j] * rs.symmetrizer_[j] / half_len;
      cv[j] = static_cast<int>(to_long(c));
    }
    rs.coroots_.push_back(std::move(cv));
  }
  return rs;
}

bool RootSystem::contains(const Root& beta) const {
  return beta.simple_coords.size() == rank() && index_.count(beta.simple_coords) > 0;
}

std::size_t RootSystem::index_of(const Root& beta) const {
  if (beta.simple_coords.size() == rank()) {
    auto it = index_.find(beta.simple_coords);
    if (it != index_.end()) return it->second;
  }
  std::ostringstream os;
  os << "not a positive root of " << type_.name() << ": (";
  for (std::size_t i = 0; i < beta.simple_coords.size(); ++i) os << (i ? "," : "") << beta.simple_coords[i];
  os << ")";
  throw Error(ErrorKind::invalid_argument, os.str());
}

Root RootSystem::simple_root(std::size_t i) const {
  if (i >= rank()) throw Error(ErrorKind::invalid_argument, "simple root index out of range");
  return positive_[i];
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  if (i >= rank()) throw Error(ErrorKind::invalid_argument, "fundamental weight index out of range");
  Weight w(rank());
  w[i] = 1;
  return w;
}

Rational RootSystem::root_length2(const Root& beta) const {
  // <beta, beta> = sum_{i,j} b_i b_j d_i a_ij
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      s += beta.simple_coords[i] * beta.simple_coords[j] * symmetrizer_[i] * cartan_[i][j];
  return s;
}

std::vector<Rational> RootSystem::simple_coords(const Weight& lambda) const {
  std::vector<Rational> out(rank(), Rational(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += cartan_inv_[i][j] * lambda[j];
  return out;
}

Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, std::size_t root_index) {
  const auto& cv = rs.coroot_coords(root_index);
  Rational s = 0;
  for (std::size_t i = 0; i < cv.size(); ++i)
    if (cv[i] != 0) s += cv[i] * lambda[i];
  return s;
}

Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Root& beta) {
  if (lambda.size() != rs.rank())
    throw Error(ErrorKind::invalid_argument, "weight length does not match the rank");
  return coroot_pairing(rs, lambda, rs.index_of(beta));
}

Rational inner_product(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (lambda.size() != rs.rank() || mu.size() != rs.rank())
    throw Error(ErrorKind::invalid_argument, "weight length does not match the rank");
  // mu = sum_j m_j alpha_j and <lambda, alpha_j> = d_j lambda_j
  auto m = rs.simple_coords(mu);
  Rational s = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j) s += m[j] * lambda[j] * rs.symmetrizer()[j];
  return s;
}

Weight weyl_vector(const RootSystem& rs) {
  Weight w(rs.rank());
  for (auto& x : w.fw_coords) x = 1;
  return w;
}

Weight root_as_weight(const RootSystem& rs, const Root& beta) {
  if (!rs.contains(beta)) rs.index_of(beta);  // throws
  Weight w(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) w[i] = pair_simple(rs.cartan(), beta.simple_coords, i);
  return w;
}

std::size_t expected_positive_root_count(LieType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace flagspec
