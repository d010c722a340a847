#include "chowkit/rootsystem.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "chowkit/error.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries)) {
  if (rank_ <= 0 || entries_.size() != static_cast<std::size_t>(rank_ * rank_)) {
    throw DomainError("Cartan matrix: expected a non-empty square matrix");
  }
  for (int i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 2) throw DomainError("Cartan matrix: diagonal entries must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw DomainError("Cartan matrix: off-diagonal entries must be <= 0");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0)) {
        throw DomainError("Cartan matrix: zero pattern is not symmetric");
      }
    }
  }
}

CartanMatrix::CartanMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DomainError("Cartan matrix: rows must have equal length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  *this = CartanMatrix(static_cast<int>(rows.size()), std::move(flat));
}

bool CartanMatrix::is_finite_type() const {
  // Leading principal minors by exact elimination.
  std::vector<Rational> m(entries_.begin(), entries_.end());
  const auto n = static_cast<std::size_t>(rank_);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k * n + k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i * n + k] / m[k * n + k];
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return true;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::ranges::all_of(coords, [](int c) { return c >= 0; }) &&
         std::ranges::any_of(coords, [](int c) { return c > 0; });
}

bool Root::is_negative() const {
  return std::ranges::all_of(coords, [](int c) { return c <= 0; }) &&
         std::ranges::any_of(coords, [](int c) { return c < 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Weight Weight::fundamental(int rank, int i) {
  Weight w{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  w.coords.at(static_cast<std::size_t>(i)) = 1;
  return w;
}

int RootSystem::simple_coroot_pairing(int i, const Root& beta) const {
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += cartan_(i, j) * beta.coords[static_cast<std::size_t>(j)];
  return p;
}

Root RootSystem::reflect_root(int i, const Root& beta) const {
  if (i < 0 || i >= rank()) throw DomainError("reflect_root: node index out of range");
  Root r = beta;
  r.coords[static_cast<std::size_t>(i)] -= simple_coroot_pairing(i, beta);
  return r;
}

Weight RootSystem::to_weight(const Root& beta) const {
  // alpha_i = sum_j <alpha_j^vee, alpha_i> omega_j
  Weight w{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      w.coords[static_cast<std::size_t>(j)] += cartan_(j, i) * beta.coords[static_cast<std::size_t>(i)];
    }
  }
  return w;
}

Weight RootSystem::reflect_weight(int i, const Weight& omega) const {
  if (i < 0 || i >= rank()) throw DomainError("reflect_weight: node index out of range");
  if (omega.coords.size() != static_cast<std::size_t>(rank())) {
    throw DomainError("reflect_weight: weight has wrong rank");
  }
  const int pairing = omega.coords[static_cast<std::size_t>(i)];
  if (pairing == 0) return omega;
  Weight alpha = to_weight(simple_root(i));
  Weight out = omega;
  for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] -= pairing * alpha.coords[j];
  return out;
}

long RootSystem::inner(const Root& beta, const Root& gamma) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      s += static_cast<long>(beta.coords[static_cast<std::size_t>(i)]) *
           gamma.coords[static_cast<std::size_t>(j)] * symmetrizer_[static_cast<std::size_t>(i)] * cartan_(i, j);
    }
  }
  return s;
}

bool RootSystem::is_root(const Root& r) const {
  if (r.coords.size() != static_cast<std::size_t>(rank())) return false;
  if (r.is_positive()) return positive_index(r) >= 0;
  if (r.is_negative()) return positive_index(-r) >= 0;
  return false;
}

int RootSystem::positive_index(const Root& r) const {
  auto key = [](const Root& x) { return std::pair{x.height(), x.coords}; };
  auto it = std::ranges::lower_bound(positive_roots_, key(r), {}, key);
  if (it == positive_roots_.end() || *it != r) return -1;
  return static_cast<int>(it - positive_roots_.begin());
}

int RootSystem::coroot_pairing(const Root& beta, const Weight& omega) const {
  if (!is_root(beta)) throw DomainError("coroot_pairing: argument is not a root");
  if (omega.coords.size() != static_cast<std::size_t>(rank())) {
    throw DomainError("coroot_pairing: weight has wrong rank");
  }
  // (alpha_j, omega_k) = d_j delta_jk, so <beta^vee, omega> = 2 sum_k b_k d_k w_k / (beta, beta).
  long num = 0;
  for (int k = 0; k < rank(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    num += 2L * beta.coords[uk] * symmetrizer_[uk] * omega.coords[uk];
  }
  const long den = inner(beta, beta);
  if (num % den != 0) throw ConsistencyError("coroot_pairing: non-integral pairing");
  return static_cast<int>(num / den);
}

namespace {

std::vector<long> compute_symmetrizer(const CartanMatrix& c) {
  const int n = c.rank();
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[static_cast<std::size_t>(start)] != 0) continue;
    d[static_cast<std::size_t>(start)] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || c(i, j) == 0) continue;
        Rational dj = d[static_cast<std::size_t>(i)] * c(i, j) / c(j, i);
        auto& slot = d[static_cast<std::size_t>(j)];
        if (slot == 0) {
          slot = dj;
          todo.push(j);
        } else if (slot != dj) {
          throw InfiniteRootSystemError("infinite root system: Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Integer lcm = 1;
  for (const auto& x : d) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& x : d) {
    Rational y = x * lcm;
    scaled.push_back(y.get_num());
    g = gcd(g, y.get_num());
  }
  std::vector<long> out;
  for (const auto& x : scaled) out.push_back(Integer(x / g).get_si());
  return out;
}

}  // namespace

RootSystemPtr build_root_system(const CartanMatrix& cartan, int height_bound, std::string name) {
  const int n = cartan.rank();
  if (n <= 0) throw DomainError("build_root_system: empty Cartan matrix");
  auto sys = std::make_shared<RootSystem>();
  sys->cartan_ = cartan;
  sys->name_ = std::move(name);
  sys->symmetrizer_ = compute_symmetrizer(cartan);
  if (!cartan.is_finite_type()) {
    throw InfiniteRootSystemError("infinite root system: Cartan matrix is not of finite type");
  }
  for (int i = 0; i < n; ++i) {
    Root a{std::vector<int>(static_cast<std::size_t>(n), 0)};
    a.coords[static_cast<std::size_t>(i)] = 1;
    sys->simple_roots_.push_back(std::move(a));
  }
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<Root> frontier = sys->simple_roots_;
  for (const auto& a : frontier) seen.emplace(a.height(), a.coords);
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        Root r = sys->reflect_root(i, beta);
        if (!r.is_positive()) continue;
        if (r.height() > height_bound) {
          throw InfiniteRootSystemError("infinite root system: height bound " + std::to_string(height_bound) +
                                        " exceeded");
        }
        if (seen.emplace(r.height(), r.coords).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [h, coords] : seen) sys->positive_roots_.push_back(Root{coords});
  return sys;
}

CartanMatrix named_cartan(std::string_view type) {
  auto bad = [&] { return DomainError("unknown root system type '" + std::string(type) + "'"); };
  if (type.size() < 2) throw bad();
  const char family = type[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(type.substr(1)), &used);
    if (used != type.size() - 1) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (n < 1 || n > 8) throw bad();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) at(i, i + 1) = at(i + 1, i) = -1;
  };
  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      if (n < 2) throw bad();
      chain(n);
      at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad();
      chain(n);
      at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(n - 1);
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
    case 'G':
      if (n != 2) throw bad();
      at(0, 1) = -3;  // alpha_1 short
      at(1, 0) = -1;
      break;
    case 'F':
      if (n != 4) throw bad();
      chain(4);
      at(2, 1) = -2;  // double edge 2 => 3, alpha_3 and alpha_4 short
      break;
    default:
      throw bad();
  }
  return CartanMatrix(n, std::move(m));
}

RootSystemPtr named_root_system(std::string_view type) {
  return build_root_system(named_cartan(type), 256, std::string(type));
}

CartanMatrix parse_cartan(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> flat;
  int rows = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("Cartan file: bad integer '" + tok + "'");
      } catch (const std::logic_error&) {
        throw ParseError("Cartan file: bad integer '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (rows == 0) width = row.size();
    if (row.size() != width) throw ParseError("Cartan file: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0 || width != static_cast<std::size_t>(rows)) throw ParseError("Cartan file: matrix is not square");
  return CartanMatrix(rows, std::move(flat));
}

CartanMatrix load_cartan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open Cartan file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cartan(buf.str());
}

}  // namespace chowkit
