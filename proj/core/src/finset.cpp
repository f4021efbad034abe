#include "fibpoly/finset.hpp"

#include <algorithm>
#include <set>

namespace fibpoly {

FinSet::FinSet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
  if (n < 0) throw structure_error("FinSet: negative size");
  if (static_cast<int>(labels->size()) != n)
    throw structure_error("FinSet: label count does not match size");
  std::set<std::string> seen(labels->begin(), labels->end());
  if (static_cast<int>(seen.size()) != n)
    throw structure_error("FinSet: labels not pairwise distinct");
}

std::string describe(const FinSet& s) {
  std::string out = "FinSet(" + std::to_string(s.size);
  if (s.labels) {
    out += "; ";
    for (int i = 0; i < s.size; ++i) {
      if (i) out += ",";
      out += (*s.labels)[i];
    }
  }
  return out + ")";
}

FinMap::FinMap(FinSet d, FinSet c, std::vector<int> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (static_cast<int>(table.size()) != dom.size)
    throw structure_error("FinMap: table length " + std::to_string(table.size()) +
                          " does not match domain " + describe(dom));
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw structure_error("FinMap: table entry " + std::to_string(v) +
                            " outside codomain " + describe(cod));
}

std::string describe(const FinMap& f) {
  std::string out = describe(f.dom) + " -> " + describe(f.cod) + " [";
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.table[i]);
  }
  return out + "]";
}

FinMap identity(const FinSet& a) {
  std::vector<int> t(a.size);
  for (int i = 0; i < a.size; ++i) t[i] = i;
  return {a, a, std::move(t)};
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod != g.dom)
    throw structure_error("compose: codomain/domain mismatch between " + describe(f) +
                          " and " + describe(g));
  std::vector<int> t(f.dom.size);
  for (int i = 0; i < f.dom.size; ++i) t[i] = g.table[f.table[i]];
  return {f.dom, g.cod, std::move(t)};
}

FinSet terminal() { return FinSet(1); }

FinMap unique_to_terminal(const FinSet& a) {
  return {a, terminal(), std::vector<int>(a.size, 0)};
}

FinMap constant_map(const FinSet& a, const FinSet& b, int value) {
  if (value < 0 || value >= b.size) throw structure_error("constant_map: value outside codomain");
  return {a, b, std::vector<int>(a.size, value)};
}

bool is_mono(const FinMap& f) {
  std::vector<char> seen(f.cod.size, 0);
  for (int v : f.table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_epi(const FinMap& f) {
  std::vector<char> seen(f.cod.size, 0);
  for (int v : f.table) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_iso(const FinMap& f) {
  return f.dom.size == f.cod.size && is_mono(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_iso(f)) throw structure_error("inverse: not an isomorphism: " + describe(f));
  std::vector<int> t(f.cod.size);
  for (int i = 0; i < f.dom.size; ++i) t[f.table[i]] = i;
  return {f.cod, f.dom, std::move(t)};
}

Product product(const FinSet& a, const FinSet& b) {
  Product p;
  p.carrier = FinSet(a.size * b.size);
  if (a.labels && b.labels) {
    std::vector<std::string> names;
    names.reserve(p.carrier.size);
    for (int i = 0; i < a.size; ++i)
      for (int j = 0; j < b.size; ++j)
        names.push_back("(" + (*a.labels)[i] + "," + (*b.labels)[j] + ")");
    p.carrier.labels = std::move(names);
  }
  std::vector<int> t1(p.carrier.size), t2(p.carrier.size);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      t1[i * b.size + j] = i;
      t2[i * b.size + j] = j;
    }
  p.pr1 = {p.carrier, a, std::move(t1)};
  p.pr2 = {p.carrier, b, std::move(t2)};
  return p;
}

FinMap pair_into_product(const Product& p, const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom) throw structure_error("pair_into_product: domain mismatch");
  if (f.cod != p.pr1.cod || g.cod != p.pr2.cod)
    throw structure_error("pair_into_product: codomains do not match the product factors");
  std::vector<int> t(f.dom.size);
  for (int i = 0; i < f.dom.size; ++i) t[i] = p.index(f.table[i], g.table[i]);
  return {f.dom, p.carrier, std::move(t)};
}

FinMap product_map(const FinMap& f, const FinMap& g) {
  Product src = product(f.dom, g.dom);
  Product dst = product(f.cod, g.cod);
  std::vector<int> t(src.carrier.size);
  for (int i = 0; i < f.dom.size; ++i)
    for (int j = 0; j < g.dom.size; ++j)
      t[src.index(i, j)] = dst.index(f.table[i], g.table[j]);
  return {src.carrier, dst.carrier, std::move(t)};
}

int Pullback::index(int a, int b) const {
  int key = a * pr2.cod.size + b;
  if (key < 0 || key >= static_cast<int>(lookup_.size())) return -1;
  return lookup_[key];
}

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (f.cod != g.cod)
    throw structure_error("pullback: codomain mismatch between " + describe(f) + " and " +
                          describe(g));
  Pullback pb;
  pb.lookup_.assign(static_cast<size_t>(f.dom.size) * g.dom.size, -1);
  std::vector<int> t1, t2;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      if (f.table[a] == g.table[b]) {
        pb.lookup_[a * g.dom.size + b] = static_cast<int>(pb.elems.size());
        pb.elems.emplace_back(a, b);
        t1.push_back(a);
        t2.push_back(b);
      }
  pb.carrier = FinSet(static_cast<int>(pb.elems.size()));
  pb.pr1 = {pb.carrier, f.dom, std::move(t1)};
  pb.pr2 = {pb.carrier, g.dom, std::move(t2)};
  return pb;
}

std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b) {
  std::vector<FinMap> out;
  if (a.size == 0) {
    out.push_back(FinMap{a, b, {}});
    return out;
  }
  if (b.size == 0) return out;
  std::vector<int> t(a.size, 0);
  while (true) {
    out.push_back(FinMap{a, b, t});
    int i = a.size - 1;
    while (i >= 0 && t[i] == b.size - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

std::vector<std::vector<int>> nondecreasing_tables(int length, int cod) {
  if (length == 0) return {{}};
  if (cod == 0) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 0);
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[i] == cod - 1) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int k = i; k < length; ++k) cur[k] = v;
  }
  return out;
}

}  // namespace fibpoly
