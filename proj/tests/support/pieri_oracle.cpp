#include "pieri_oracle.hpp"

#include <deque>
#include <stdexcept>

namespace chowkit::testing {

namespace {

void monomials(int vars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    monomials(vars, degree - e, cur, out);
    cur.pop_back();
  }
}

void add_to(PieriClosureOracle::Vector& v, int k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = v[k];
  slot += c;
  if (slot == 0) v.erase(k);
}

}  // namespace

PieriClosureOracle::PieriClosureOracle(std::vector<std::vector<int>> cartan) : cartan_(std::move(cartan)) {
  const int r = rank();
  // Symmetrizer by propagation along the (connected) diagram.
  d_.assign(static_cast<std::size_t>(r), Rational(0));
  d_[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (d_[i] == 0 || d_[j] != 0 || cartan_[i][j] == 0) continue;
        d_[j] = d_[i] * cartan_[i][j] / cartan_[j][i];
        changed = true;
      }
    }
  }

  Images id(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int j = 0; j < r; ++j) id[j][j] = 1;
  std::deque<Images> queue{id};
  index_[id] = 0;
  elements_.push_back(id);
  while (!queue.empty()) {
    const Images w = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Images next = w;
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) next[j][k] = w[j][k] - cartan_[i][j] * w[i][k];
      }
      if (index_.count(next)) continue;
      if (elements_.size() > 5000) throw std::runtime_error("oracle: group too large");
      index_[next] = static_cast<int>(elements_.size());
      elements_.push_back(next);
      queue.push_back(next);
    }
  }

  std::map<std::vector<int>, int> roots;
  for (const auto& w : elements_) {
    for (const auto& beta : w) {
      if (is_positive(beta)) roots.emplace(beta, 0);
    }
  }
  for (const auto& [beta, unused] : roots) positive_.push_back(beta);

  for (const auto& w : elements_) {
    int l = 0;
    for (const auto& beta : positive_) l += is_positive(apply(w, beta)) ? 0 : 1;
    lengths_.push_back(l);
    if (l > top_) top_ = l;
  }
  for (int w = 0; w < size(); ++w) {
    if (lengths_[w] == top_) unit_ = w;
  }

  for (const auto& beta : positive_) {
    const Rational bb = form(beta, beta);
    Images s(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      std::vector<int> a(static_cast<std::size_t>(r), 0);
      a[j] = 1;
      const Rational c = 2 * form(a, beta) / bb;
      if (c.get_den() != 1) throw std::runtime_error("oracle: non-integral reflection");
      const int ci = static_cast<int>(c.get_num().get_si());
      for (int k = 0; k < r; ++k) a[k] -= ci * beta[k];
      s[j] = a;
    }
    reflection_.push_back(index_of(s));
  }

  // Express every class as a polynomial in the divisors, codimension by codimension.
  expression_.resize(elements_.size());
  for (int k = 0; k <= top_; ++k) {
    std::vector<int> classes;
    for (int w = 0; w < size(); ++w) {
      if (lengths_[w] == top_ - k) classes.push_back(w);
    }
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    monomials(r, k, cur, monos);
    const std::size_t n = classes.size();
    const std::size_t m = monos.size();
    // Augmented [A | I] with A's columns the images of the monomials.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m + n));
    for (std::size_t c = 0; c < m; ++c) {
      Vector v{{unit_, Rational(1)}};
      for (int i = 0; i < r; ++i) {
        for (int e = 0; e < monos[c][i]; ++e) v = chevalley(i, v);
      }
      for (std::size_t row = 0; row < n; ++row) {
        auto it = v.find(classes[row]);
        if (it != v.end()) a[row][c] = it->second;
      }
    }
    for (std::size_t row = 0; row < n; ++row) a[row][m + row] = 1;
    std::vector<std::size_t> pivot_col(n);
    std::size_t rank_found = 0;
    for (std::size_t col = 0; col < m && rank_found < n; ++col) {
      std::size_t p = rank_found;
      while (p < n && a[p][col] == 0) ++p;
      if (p == n) continue;
      std::swap(a[p], a[rank_found]);
      const Rational inv = 1 / a[rank_found][col];
      for (auto& x : a[rank_found]) x *= inv;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == rank_found || a[row][col] == 0) continue;
        const Rational f = a[row][col];
        for (std::size_t c = 0; c < m + n; ++c) a[row][c] -= f * a[rank_found][c];
      }
      pivot_col[rank_found++] = col;
    }
    if (rank_found != n) throw std::runtime_error("oracle: divisors do not generate the Chow ring over Q");
    for (std::size_t t = 0; t < n; ++t) {
      auto& expr = expression_[static_cast<std::size_t>(classes[t])];
      for (std::size_t row = 0; row < n; ++row) {
        const Rational c = a[row][m + t];
        if (c != 0) expr.emplace_back(monos[pivot_col[row]], c);
      }
    }
  }
}

int PieriClosureOracle::index_of(const Images& images) const {
  auto it = index_.find(images);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> PieriClosureOracle::apply(const Images& w, const std::vector<int>& x) const {
  std::vector<int> out(x.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = 0; k < x.size(); ++k) out[k] += x[j] * w[j][k];
  }
  return out;
}

PieriClosureOracle::Images PieriClosureOracle::compose(const Images& u, const Images& v) const {
  Images out;
  for (const auto& img : v) out.push_back(apply(u, img));
  return out;
}

Rational PieriClosureOracle::form(const std::vector<int>& x, const std::vector<int>& y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) s += x[i] * y[j] * d_[i] * cartan_[i][j];
  }
  return s;
}

bool PieriClosureOracle::is_positive(const std::vector<int>& x) const {
  bool any = false;
  for (int c : x) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

PieriClosureOracle::Vector PieriClosureOracle::chevalley(int a, const Vector& x) const {
  Vector out;
  for (const auto& [w, c] : x) {
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      const int ws = index_of(compose(elements_[w], elements_[reflection_[k]]));
      if (lengths_[ws] != lengths_[w] - 1) continue;
      const auto& beta = positive_[k];
      // <beta^vee, omega_a> = beta_a (alpha_a, alpha_a) / (beta, beta)
      add_to(out, ws, c * beta[a] * 2 * d_[a] / form(beta, beta));
    }
  }
  return out;
}

PieriClosureOracle::Vector PieriClosureOracle::multiply(int a, int b) const {
  Vector out;
  for (const auto& [mono, c] : expression_[static_cast<std::size_t>(a)]) {
    Vector v{{b, Rational(1)}};
    for (int i = 0; i < rank(); ++i) {
      for (int e = 0; e < mono[i]; ++e) v = chevalley(i, v);
    }
    for (const auto& [k, ck] : v) add_to(out, k, c * ck);
  }
  return out;
}

}  // namespace chowkit::testing
