#include "permrel/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "permrel/errors.hpp"

namespace permrel {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
  std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 1 || v > degree() || seen[v - 1])
      throw ParseError("image list is not a bijection of {1..n}");
    seen[v - 1] = 1;
  }
}

Perm Perm::then(const Perm& next) const {
  std::vector<int> out(img_.size());
  for (int p = 1; p <= degree(); ++p) out[p - 1] = next.apply(apply(p));
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<int> out(img_.size());
  for (int p = 1; p <= degree(); ++p) out[img_[p - 1] - 1] = p;
  return Perm(std::move(out));
}

bool Perm::is_identity() const {
  for (int p = 1; p <= degree(); ++p)
    if (img_[p - 1] != p) return false;
  return true;
}

bool Perm::fixes_some_point() const {
  for (int p = 1; p <= degree(); ++p)
    if (img_[p - 1] == p) return true;
  return false;
}

std::string Perm::cycle_string() const {
  std::vector<char> done(img_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int p = 1; p <= degree(); ++p) {
    if (done[p - 1] || img_[p - 1] == p) continue;
    any = true;
    out << '(';
    int q = p;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << q;
      done[q - 1] = 1;
      q = img_[q - 1];
      first = false;
    } while (q != p);
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm parse_perm(const std::string& text, int n) {
  if (n < 1) throw ParseError("degree must be at least 1");
  Perm result(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    std::set<int> used;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',') {
        ++i;
        skip_ws();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i])) == 0)
        throw ParseError("expected a point in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > n) throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (!used.insert(v).second)
        throw ParseError("point " + std::to_string(v) + " repeated within one cycle");
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (cycle.size() > 1) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t k = 0; k + 1 < cycle.size(); ++k) img[cycle[k] - 1] = cycle[k + 1];
      img[cycle.back() - 1] = cycle.front();
      result = result.then(Perm(std::move(img)));
    }
    skip_ws();
  }
  return result;
}

PermGroup close(int n, const std::vector<Perm>& gens, int max_degree, std::size_t max_elements) {
  if (n < 1) throw ParseError("degree must be at least 1");
  if (n > max_degree)
    throw CapExceeded("degree " + std::to_string(n) + " above cap " + std::to_string(max_degree));
  for (const Perm& g : gens)
    if (g.degree() != n) throw ParseError("generator degree does not match n");

  PermGroup h;
  h.n = n;
  h.generators = gens;

  std::set<Perm> elems;
  std::vector<Perm> frontier;
  elems.insert(Perm(n));
  frontier.push_back(Perm(n));
  std::vector<Perm> muls = gens;
  for (const Perm& g : gens) muls.push_back(g.inverse());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& m : muls) {
        Perm p = e.then(m);
        if (elems.insert(p).second) {
          if (elems.size() > max_elements)
            throw CapExceeded("group closure larger than cap " + std::to_string(max_elements));
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  h.elements.assign(elems.begin(), elems.end());

  // Orbits of the full group, blocks keyed by their minimum.
  std::vector<int> root(static_cast<std::size_t>(n), 0);
  for (int p = 1; p <= n; ++p) {
    if (root[p - 1] != 0) continue;
    std::vector<int> orbit{p};
    root[p - 1] = p;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const Perm& g : h.elements) {
        int q = g.apply(orbit[k]);
        if (root[q - 1] == 0) {
          root[q - 1] = p;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    h.orbits.push_back(std::move(orbit));
  }
  for (const auto& orbit : h.orbits) h.reps.push_back(orbit.front());
  h.rep_of = root;
  return h;
}

Classification classify(const PermGroup& h) {
  Classification c;
  c.semi_regular = true;
  for (const Perm& g : h.elements)
    if (!g.is_identity() && g.fixes_some_point()) c.semi_regular = false;
  c.abelian = true;
  for (const Perm& a : h.elements)
    for (const Perm& b : h.elements)
      if (a.then(b) != b.then(a)) c.abelian = false;
  c.transitive = h.orbits.size() == 1;
  c.cancellative_predicted = c.semi_regular && c.abelian;
  return c;
}

}  // namespace permrel
