#include "qm/unipotent.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qm/gf2.hpp"

namespace qm::unipotent {

using Elt = GroupTable::Elt;
using Label = GroupTable::Label;

BitMatrix BitMatrix::identity(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("BitMatrix size must be 1..8");
  BitMatrix m;
  m.n_ = n;
  for (int i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint8_t>(1u << i);
  return m;
}

BitMatrix BitMatrix::elementary(int n, int i, int j) {
  BitMatrix m = identity(n);
  m.set(i, j, true);
  return m;
}

BitMatrix BitMatrix::from_key(int n, std::uint64_t key) {
  BitMatrix m;
  m.n_ = n;
  for (int i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint8_t>(key >> (8 * i));
  return m;
}

void BitMatrix::set(int i, int j, bool v) {
  if (v)
    rows_[i] |= static_cast<std::uint8_t>(1u << j);
  else
    rows_[i] &= static_cast<std::uint8_t>(~(1u << j));
}

bool BitMatrix::is_unipotent() const {
  for (int i = 0; i < n_; ++i)
    if ((rows_[i] & ((2u << i) - 1)) != (1u << i)) return false;
  return true;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  BitMatrix r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    std::uint8_t acc = 0;
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) acc ^= o.rows_[j];
    r.rows_[i] = acc;
  }
  return r;
}

BitMatrix BitMatrix::inverse() const {
  // (I + N)^{-1} = I + N + N^2 + ... over F_2
  BitMatrix nil = *this, id = identity(n_), sum = id, term = id;
  for (int i = 0; i < n_; ++i) nil.rows_[i] ^= id.rows_[i];
  for (int k = 1; k < n_; ++k) {
    term = term * nil;
    for (int i = 0; i < n_; ++i) sum.rows_[i] ^= term.rows_[i];
  }
  return sum;
}

BitMatrix BitMatrix::corner(int offset, int m) const {
  BitMatrix r;
  r.n_ = m;
  for (int i = 0; i < m; ++i) r.rows_[i] = static_cast<std::uint8_t>((rows_[i + offset] >> offset) & ((1u << m) - 1));
  return r;
}

std::uint64_t BitMatrix::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= std::uint64_t{rows_[i]} << (8 * i);
  return k;
}

std::string to_string(const BitMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.size(); ++i) {
    if (i) out << '/';
    for (int j = 0; j < m.size(); ++j) out << (m.get(i, j) ? '1' : '0');
  }
  return out.str();
}

GroupTable GroupTable::generate(const std::vector<Label>& gens, Label identity,
                                const std::function<Label(Label, Label)>& mul) {
  GroupTable G;
  G.labels_.push_back(identity);
  G.index_[identity] = 0;
  for (std::size_t head = 0; head < G.labels_.size(); ++head)
    for (Label g : gens) {
      Label x = mul(G.labels_[head], g);
      if (G.index_.emplace(x, static_cast<Elt>(G.labels_.size())).second) G.labels_.push_back(x);
    }
  std::size_t n = G.labels_.size();
  G.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = G.index_.find(mul(G.labels_[a], G.labels_[b]));
      if (it == G.index_.end()) throw std::logic_error("group closure is not closed under multiplication");
      G.table_[a * n + b] = it->second;
    }
  G.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (G.table_[a * n + b] == 0) {
        G.inverse_[a] = static_cast<Elt>(b);
        break;
      }
  for (Label g : gens) G.gens_.push_back(G.index_.at(g));
  if (!G.verify_axioms()) throw std::logic_error("group table fails the group axioms");
  return G;
}

Elt GroupTable::power(Elt a, unsigned k) const {
  Elt r = identity();
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

unsigned GroupTable::element_order(Elt a) const {
  unsigned k = 1;
  for (Elt x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::optional<Elt> GroupTable::find(Label l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GroupTable::verify_axioms() const {
  std::size_t n = order();
  for (Elt a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return false;
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
  }
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      for (Elt g : gens_)
        if (mul(mul(x, y), g) != mul(x, mul(y, g))) return false;
  return true;
}

std::vector<Elt> GroupTable::subgroup(const std::vector<Elt>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elt> out{identity()};
  seen[identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elt g : gens) {
      Elt x = mul(out[head], g);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool GroupTable::is_central(Elt a) const {
  for (Elt g = 0; g < order(); ++g)
    if (mul(a, g) != mul(g, a)) return false;
  return true;
}

GroupTable direct_product(const GroupTable& G, const GroupTable& H) {
  std::vector<Label> gens;
  for (Elt g : G.gens()) gens.push_back(Label{g} << 32);
  for (Elt h : H.gens()) gens.push_back(Label{h});
  return GroupTable::generate(gens, 0, [&](Label x, Label y) {
    Elt g = G.mul(static_cast<Elt>(x >> 32), static_cast<Elt>(y >> 32));
    Elt h = H.mul(static_cast<Elt>(x & 0xffffffffu), static_cast<Elt>(y & 0xffffffffu));
    return (Label{g} << 32) | h;
  });
}

GroupTable cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  return GroupTable::generate({n == 1 ? 0u : 1u}, 0, [n](Label x, Label y) { return (x + y) % n; });
}

GroupTable permutation_group(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t k = gens[0].size();
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, Label> ids;
  auto id_of = [&](const std::vector<int>& p) {
    auto [it, fresh] = ids.emplace(p, perms.size());
    if (fresh) perms.push_back(p);
    return it->second;
  };
  std::vector<int> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<int>(i);
  Label identity = id_of(e);
  std::vector<Label> glabels;
  for (const auto& g : gens) {
    if (g.size() != k) throw std::invalid_argument("permutations of different degrees");
    glabels.push_back(id_of(g));
  }
  return GroupTable::generate(glabels, identity, [&](Label x, Label y) {
    const auto p = perms[x];
    const auto q = perms[y];
    std::vector<int> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = p[q[i]];
    return id_of(r);
  });
}

GroupTable subgroup_table(const GroupTable& G, const std::vector<Elt>& gens) {
  std::vector<Label> labels(gens.begin(), gens.end());
  return GroupTable::generate(labels, G.identity(), [&](Label x, Label y) {
    return Label{G.mul(static_cast<Elt>(x), static_cast<Elt>(y))};
  });
}

BitMatrix matrix_of(const GroupTable& G, Elt a, int size) { return BitMatrix::from_key(size, G.label(a)); }

UnipotentGroups build_groups(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("build_groups expects 2 <= n <= 4");
  int m = n + 1;
  UnipotentGroups out;
  out.n = n;
  std::vector<Label> gens;
  for (int i = 0; i < n; ++i) gens.push_back(BitMatrix::elementary(m, i, i + 1).key());
  Label id = BitMatrix::identity(m).key();
  out.U = GroupTable::generate(gens, id, [m](Label x, Label y) {
    return (BitMatrix::from_key(m, x) * BitMatrix::from_key(m, y)).key();
  });
  auto erase_corner = [m](Label x) {
    BitMatrix M = BitMatrix::from_key(m, x);
    M.set(0, m - 1, false);
    return M.key();
  };
  out.Ubar = GroupTable::generate(gens, id, [m, erase_corner](Label x, Label y) {
    return erase_corner((BitMatrix::from_key(m, x) * BitMatrix::from_key(m, y)).key());
  });
  auto abel = [m, n](Label x) {
    BitMatrix M = BitMatrix::from_key(m, x);
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
      if (M.get(i, i + 1)) bits |= 1u << i;
    return bits;
  };
  for (Elt a = 0; a < out.U.order(); ++a) {
    out.U_abel.push_back(abel(out.U.label(a)));
    out.U_to_Ubar.push_back(*out.Ubar.find(erase_corner(out.U.label(a))));
    if (out.U_abel.back() == 0) out.Q.push_back(a);
    if (out.U.is_central(a)) out.Z.push_back(a);
  }
  for (Elt a = 0; a < out.Ubar.order(); ++a) {
    out.Ubar_abel.push_back(abel(out.Ubar.label(a)));
    if (out.Ubar_abel.back() == 0) out.Qbar.push_back(a);
  }
  std::size_t expected = std::size_t{1} << (n * (n + 1) / 2);
  if (out.U.order() != expected || out.Ubar.order() * 2 != expected) throw std::logic_error("unexpected group order");
  if (out.Z.size() != 2 || BitMatrix::from_key(m, out.U.label(out.Z[1])) != BitMatrix::elementary(m, 0, m - 1))
    throw std::logic_error("center is not generated by the corner entry");
  if (out.Q.size() != expected >> n || out.Qbar.size() * 2 != out.Q.size())
    throw std::logic_error("unexpected kernel sizes");
  for (Elt a = 0; a < out.U.order(); ++a)
    for (Elt b : out.U.gens())
      if (out.U_to_Ubar[out.U.mul(a, b)] != out.Ubar.mul(out.U_to_Ubar[a], out.U_to_Ubar[b]))
        throw std::logic_error("U -> Ubar is not a homomorphism");
  return out;
}

namespace {

int inverse_letter(int x) { return x ^ 1; }

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = inverse_letter(x);
  return r;
}

Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Word commutator(const Word& x, const Word& y) { return concat({inverse_word(x), inverse_word(y), x, y}); }

// HLT coset enumeration over the trivial subgroup; returns the compacted coset table.
std::optional<std::vector<std::vector<int>>> coset_table(const Presentation& P, std::size_t max_cosets) {
  const int cols = 2 * P.generators;
  std::vector<std::vector<int>> table;
  std::vector<int> parent;
  std::vector<int> queue;
  bool overflow = false;

  auto define = [&](int c, int x) {
    if (table.size() >= max_cosets) {
      overflow = true;
      return;
    }
    int d = static_cast<int>(table.size());
    table.emplace_back(cols, -1);
    parent.push_back(d);
    table[c][x] = d;
    table[d][inverse_letter(x)] = c;
  };
  auto rep = [&](int c) {
    int r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      int next = parent[c];
      parent[c] = r;
      c = next;
    }
    return r;
  };
  auto merge = [&](int k, int l) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.push_back(b);
  };
  auto coincidence = [&](int a, int b) {
    queue.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int g = queue[i];
      for (int x = 0; x < cols; ++x) {
        int d = table[g][x];
        if (d < 0) continue;
        table[d][inverse_letter(x)] = -1;
        int mu = rep(g), nu = rep(d);
        if (table[mu][x] >= 0) {
          merge(nu, table[mu][x]);
        } else if (table[nu][inverse_letter(x)] >= 0) {
          merge(mu, table[nu][inverse_letter(x)]);
        } else {
          table[mu][x] = nu;
          table[nu][inverse_letter(x)] = mu;
        }
      }
    }
  };
  auto scan_and_fill = [&](int a, const Word& w) {
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table[f][w[i]] >= 0) f = table[f][w[i++]];
      if (i > j) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j >= i && table[b][inverse_letter(w[j])] >= 0) b = table[b][inverse_letter(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table[f][w[i]] = b;
        table[b][inverse_letter(w[i])] = f;
        return;
      }
      define(f, w[i]);
      if (overflow) return;
    }
  };

  table.emplace_back(cols, -1);
  parent.push_back(0);
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (const auto& w : P.relators) {
      if (parent[a] != static_cast<int>(a)) break;
      scan_and_fill(static_cast<int>(a), w);
      if (overflow) return std::nullopt;
    }
    if (parent[a] != static_cast<int>(a)) continue;
    for (int x = 0; x < cols; ++x)
      if (table[a][x] < 0) {
        define(static_cast<int>(a), x);
        if (overflow) return std::nullopt;
      }
  }
  std::vector<int> renumber(table.size(), -1);
  int live = 0;
  for (std::size_t c = 0; c < table.size(); ++c)
    if (parent[c] == static_cast<int>(c)) renumber[c] = live++;
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (renumber[c] < 0) continue;
    std::vector<int> row(cols);
    for (int x = 0; x < cols; ++x) row[x] = renumber[rep(table[c][x])];
    out.push_back(row);
  }
  return out;
}

}  // namespace

Presentation u4_presentation() {
  Presentation P;
  P.generators = 3;
  P.names = {"a", "b", "c"};
  Word a{0}, b{2}, c{4};
  Word ab = commutator(a, b), bc = commutator(b, c);
  Word ab_c = commutator(ab, c), a_bc = commutator(a, bc);
  P.relators = {concat({a, a}),  concat({b, b}),   concat({c, c}),
                concat({ab, ab}), concat({bc, bc}), commutator(a, c),
                concat({ab_c, inverse_word(a_bc)}), concat({ab_c, ab_c})};
  P.relator_names = {"a^2", "b^2", "c^2", "[a,b]^2", "[b,c]^2", "[a,c]", "[[a,b],c]=[a,[b,c]]", "[[a,b],c]^2"};
  return P;
}

std::optional<std::size_t> enumerate_order(const Presentation& P, std::size_t max_cosets) {
  auto t = coset_table(P, max_cosets);
  if (!t) return std::nullopt;
  return t->size();
}

Elt evaluate(const GroupTable& G, const std::vector<Elt>& gen_images, const Word& w) {
  Elt r = G.identity();
  for (int x : w) {
    Elt g = gen_images.at(static_cast<std::size_t>(x / 2));
    r = G.mul(r, (x & 1) ? G.inv(g) : g);
  }
  return r;
}

PresentationReport verify_presentation_u4() {
  PresentationReport rep;
  auto groups = build_groups(3);
  const GroupTable& U = groups.U;
  Presentation P = u4_presentation();
  rep.relations_hold = true;
  for (const auto& w : P.relators)
    if (evaluate(U, U.gens(), w) != U.identity()) rep.relations_hold = false;
  rep.generated_order = U.subgroup(U.gens()).size();
  rep.presented_order = enumerate_order(P);
  bool some_changed = false;
  for (std::size_t i = 0; i < P.relators.size(); ++i) {
    Presentation Q = P;
    Q.relators.erase(Q.relators.begin() + static_cast<long>(i));
    rep.dropped_orders.push_back(enumerate_order(Q, 1 << 16));
    if (rep.dropped_orders.back() != std::optional<std::size_t>(64)) some_changed = true;
  }
  rep.ok = rep.relations_hold && rep.generated_order == 64 && rep.presented_order == std::optional<std::size_t>(64) &&
           some_changed;
  return rep;
}

CartesianReport cartesian_square_check() {
  auto g5 = build_groups(4);
  auto g4 = build_groups(3);
  CartesianReport rep;
  rep.domain = g5.Ubar.order();
  rep.compatible = true;
  std::set<std::pair<Label, Label>> image;
  for (Elt x = 0; x < g5.Ubar.order(); ++x) {
    BitMatrix M = matrix_of(g5.Ubar, x, 5);
    BitMatrix top = M.corner(0, 4), bottom = M.corner(1, 4);
    if (top.corner(1, 3) != bottom.corner(0, 3)) rep.compatible = false;
    image.emplace(top.key(), bottom.key());
  }
  rep.image = image.size();
  for (Elt a = 0; a < g4.U.order(); ++a)
    for (Elt b = 0; b < g4.U.order(); ++b)
      if (matrix_of(g4.U, a, 4).corner(1, 3) == matrix_of(g4.U, b, 4).corner(0, 3)) ++rep.fiber_product;
  rep.injective = rep.image == rep.domain;
  rep.bijective = rep.compatible && rep.injective && rep.image == rep.fiber_product;
  return rep;
}

namespace {

// phi on the subgroup generated by the first k generators, or nullopt if the images are inconsistent.
template <class Value, class Combine>
std::optional<std::vector<Value>> extend(const GroupTable& G, std::size_t k, const std::vector<Value>& images,
                                         Value identity, Combine combine) {
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(G.order(), unset);
  std::vector<Value> phi(G.order(), identity);
  std::vector<Elt> order{G.identity()};
  slot[G.identity()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Elt g = order[head];
    for (std::size_t i = 0; i < k; ++i) {
      Elt x = G.mul(g, G.gens()[i]);
      Value v = combine(phi[g], images[i]);
      if (slot[x] == unset) {
        slot[x] = order.size();
        phi[x] = v;
        order.push_back(x);
      } else if (phi[x] != v) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

}  // namespace

std::optional<std::vector<Elt>> extend_homomorphism(const GroupTable& G, const GroupTable& T,
                                                    const std::vector<Elt>& gen_images) {
  if (gen_images.size() != G.gens().size()) throw std::invalid_argument("one image per generator expected");
  return extend<Elt>(G, G.gens().size(), gen_images, T.identity(), [&T](Elt a, Elt b) { return T.mul(a, b); });
}

std::optional<std::vector<Elt>> lift_search(const GroupTable& G, const std::vector<std::uint32_t>& h,
                                            const GroupTable& target, const std::vector<std::uint32_t>& target_proj) {
  std::size_t k = G.gens().size();
  if (h.size() != k) throw std::invalid_argument("h must be given on every generator");
  if (!extend<std::uint32_t>(G, k, h, 0u, [](std::uint32_t a, std::uint32_t b) { return a ^ b; }))
    throw std::invalid_argument("h is not a homomorphism");
  std::vector<std::vector<Elt>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Elt t = 0; t < target.order(); ++t)
      if (target_proj[t] == h[i]) candidates[i].push_back(t);
  std::vector<Elt> images(k, target.identity());
  auto combine = [&target](Elt a, Elt b) { return target.mul(a, b); };
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == k) return true;
    for (Elt t : candidates[i]) {
      images[i] = t;
      if (extend<Elt>(G, i + 1, images, target.identity(), combine) && assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return images;
}

std::uint32_t GModule::act(Elt g, std::uint32_t v) const {
  std::uint32_t r = 0;
  for (int j = 0; j < dim; ++j)
    if (v >> j & 1) r ^= action[g][j];
  return r;
}

bool GModule::is_valid() const {
  const GroupTable& G = *group;
  for (int j = 0; j < dim; ++j)
    if (action[G.identity()][j] != (1u << j)) return false;
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt h = 0; h < G.order(); ++h)
      for (int j = 0; j < dim; ++j)
        if (act(G.mul(g, h), 1u << j) != act(g, act(h, 1u << j))) return false;
  return true;
}

GModule trivial_module(const GroupTable& G, int dim) {
  GModule M{&G, dim, {}};
  std::vector<std::uint32_t> id(dim);
  for (int j = 0; j < dim; ++j) id[j] = 1u << j;
  M.action.assign(G.order(), id);
  return M;
}

bool is_cocycle(const GModule& M, const Cochain2& c) {
  const GroupTable& G = *M.group;
  std::size_t n = G.order();
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h)
      for (Elt k = 0; k < n; ++k) {
        std::uint32_t v = M.act(g, c[h * n + k]) ^ c[G.mul(g, h) * n + k] ^ c[g * n + G.mul(h, k)] ^ c[g * n + h];
        if (v) return false;
      }
  return true;
}

std::optional<std::vector<std::uint32_t>> coboundary_preimage(const GModule& M, const Cochain2& c) {
  const GroupTable& G = *M.group;
  std::size_t n = G.order(), d = static_cast<std::size_t>(M.dim);
  // unknown (g, j): bit j of f(g); (df)(g, h) = g.f(h) + f(gh) + f(g)
  gf2::System sys(n * d);
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) {
      Elt gh = G.mul(g, h);
      for (std::size_t b = 0; b < d; ++b) {
        gf2::Row row = sys.new_row();
        for (std::size_t j = 0; j < d; ++j)
          if (M.action[g][j] >> b & 1) row.flip(h * d + j);
        row.flip(gh * d + b);
        row.flip(g * d + b);
        if (c[g * n + h] >> b & 1) row.flip_rhs();
        if (!sys.add(std::move(row))) return std::nullopt;
      }
    }
  auto x = sys.solve();
  if (!x) return std::nullopt;
  std::vector<std::uint32_t> f(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < d; ++j)
      if ((*x)[g * d + j]) f[g] |= 1u << j;
  return f;
}

std::vector<std::vector<std::uint8_t>> characters(const GroupTable& G) {
  std::size_t k = G.gens().size();
  if (k > 20) throw std::invalid_argument("too many generators");
  std::set<std::vector<std::uint8_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::uint8_t> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = mask >> i & 1;
    auto phi = extend<std::uint8_t>(G, k, images, 0, [](std::uint8_t a, std::uint8_t b) {
      return static_cast<std::uint8_t>(a ^ b);
    });
    if (phi) out.insert(*phi);
  }
  return {out.begin(), out.end()};
}

bool cup_vanishes(const GroupTable& G, const std::vector<std::uint8_t>& chi1, const std::vector<std::uint8_t>& chi2) {
  std::size_t n = G.order();
  Cochain2 c(n * n);
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) c[g * n + h] = chi1[g] & chi2[h];
  return coboundary_preimage(trivial_module(G, 1), c).has_value();
}

namespace {

// P = entries (1,4), (1,5), (2,4), (2,5) of U_5 (1-based), as bits 0..3.
const std::array<std::pair<int, int>, 4> kP{{{0, 3}, {0, 4}, {1, 3}, {1, 4}}};

std::uint32_t p_bits(const BitMatrix& M) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < kP.size(); ++i)
    if (M.get(kP[i].first, kP[i].second)) v |= 1u << i;
  return v;
}

BitMatrix p_matrix(std::uint32_t v) {
  BitMatrix M = BitMatrix::identity(5);
  for (std::size_t i = 0; i < kP.size(); ++i)
    if (v >> i & 1) M.set(kP[i].first, kP[i].second, true);
  return M;
}

// (f1 at (1,3), e1 at (2,3)) and (e2 at (1,2), f2 at (1,3)) -> P
std::uint32_t bilinear(const BitMatrix& n, const BitMatrix& np) {
  bool f1 = n.get(0, 2), e1 = n.get(1, 2), e2 = np.get(0, 1), f2 = np.get(0, 2);
  BitMatrix M = BitMatrix::identity(5);
  M.set(0, 3, f1 && e2);
  M.set(0, 4, f1 && f2);
  M.set(1, 3, e1 && e2);
  M.set(1, 4, e1 && f2);
  return p_bits(M);
}

}  // namespace

H2Report h2_class_vs_cup() {
  H2Report rep;
  auto g3 = build_groups(2);
  const GroupTable& U3 = g3.U;
  GroupTable G = direct_product(U3, U3);
  std::size_t n = G.order();
  auto first = [&](Elt g) { return matrix_of(U3, static_cast<Elt>(G.label(g) >> 32), 3); };
  auto second = [&](Elt g) { return matrix_of(U3, static_cast<Elt>(G.label(g) & 0xffffffffu), 3); };
  // section: corners filled in, P entries zero
  auto section = [&](Elt g) {
    BitMatrix A = first(g), B = second(g), M = BitMatrix::identity(5);
    M.set(0, 1, A.get(0, 1));
    M.set(0, 2, A.get(0, 2));
    M.set(1, 2, A.get(1, 2));
    M.set(2, 3, B.get(0, 1));
    M.set(2, 4, B.get(0, 2));
    M.set(3, 4, B.get(1, 2));
    return M;
  };
  GModule P{&G, 4, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(4))};
  for (Elt g = 0; g < n; ++g) {
    BitMatrix s = section(g), si = s.inverse();
    for (int j = 0; j < 4; ++j) P.action[g][j] = p_bits(s * p_matrix(1u << j) * si);
  }
  Cochain2 ext(n * n);
  bool in_p = true;
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) {
      BitMatrix m = section(g) * section(h) * section(G.mul(g, h)).inverse();
      if (p_matrix(p_bits(m)) != m) in_p = false;
      ext[g * n + h] = p_bits(m);
    }
  rep.extension_is_cocycle = in_p && P.is_valid() && is_cocycle(P, ext);

  // N = {(1,3), (2,3)} with complement S = {(1,2)}; N' = {(1,2), (1,3)} with complement S' = {(2,3)}
  auto t = [](const BitMatrix& g) {
    BitMatrix s = BitMatrix::identity(3);
    s.set(0, 1, g.get(0, 1));
    return g * s.inverse();
  };
  auto tp = [](const BitMatrix& g) {
    BitMatrix s = BitMatrix::identity(3);
    s.set(1, 2, g.get(1, 2));
    return g * s.inverse();
  };
  std::vector<BitMatrix> N, Np;
  for (Elt a = 0; a < U3.order(); ++a) {
    BitMatrix M = matrix_of(U3, a, 3);
    if (!M.get(0, 1)) N.push_back(M);
    if (!M.get(1, 2)) Np.push_back(M);
  }
  std::set<std::uint32_t> basis_images;
  for (const auto& a : N)
    for (const auto& b : Np)
      if (p_bits(a) == 0 && p_bits(b) == 0 && (a.get(0, 2) != a.get(1, 2)) && (b.get(0, 1) != b.get(0, 2)))
        basis_images.insert(bilinear(a, b));
  rep.bilinear_matches = basis_images == std::set<std::uint32_t>{1, 2, 4, 8};
  rep.equivariant = true;
  for (Elt g = 0; g < n; ++g) {
    BitMatrix A = first(g), B = second(g);
    for (const auto& a : N)
      for (const auto& b : Np)
        if (bilinear(A * a * A.inverse(), B * b * B.inverse()) != P.act(g, bilinear(a, b))) rep.equivariant = false;
  }
  Cochain2 cup(n * n), diff(n * n);
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) {
      BitMatrix B = second(g);
      cup[g * n + h] = bilinear(t(first(g)), B * tp(second(h)) * B.inverse());
      diff[g * n + h] = cup[g * n + h] ^ ext[g * n + h];
    }
  rep.differ_by_coboundary = is_cocycle(P, cup) && coboundary_preimage(P, diff).has_value();
  rep.class_nonzero = !coboundary_preimage(P, ext).has_value();
  return rep;
}

namespace {

GroupTable from_presentation(const Presentation& P) {
  auto t = coset_table(P, 1 << 12);
  if (!t) throw std::logic_error("presentation did not close");
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(P.generators), std::vector<int>(t->size()));
  for (std::size_t c = 0; c < t->size(); ++c)
    for (int g = 0; g < P.generators; ++g) perms[g][c] = (*t)[c][2 * g];
  return permutation_group(perms);
}

Presentation two_generator(std::vector<Word> relators) {
  Presentation P;
  P.generators = 2;
  P.names = {"x", "y"};
  P.relators = std::move(relators);
  return P;
}

Word pw(int letter, int k) { return Word(static_cast<std::size_t>(k), letter); }

}  // namespace

std::vector<std::pair<std::string, GroupTable>> small_two_groups() {
  const int x = 0, X = 1, y = 2, Y = 3;
  std::vector<std::pair<std::string, GroupTable>> out;
  for (unsigned k : {2u, 4u, 8u, 16u}) out.emplace_back("C" + std::to_string(k), cyclic_group(k));
  auto C2 = cyclic_group(2), C4 = cyclic_group(4), C8 = cyclic_group(8);
  auto V4 = direct_product(C2, C2);
  out.emplace_back("C2xC2", V4);
  out.emplace_back("C4xC2", direct_product(C4, C2));
  out.emplace_back("C2^3", direct_product(V4, C2));
  out.emplace_back("C4xC4", direct_product(C4, C4));
  out.emplace_back("C8xC2", direct_product(C8, C2));
  out.emplace_back("C2^4", direct_product(V4, V4));
  out.emplace_back("C4xC2xC2", direct_product(C4, V4));
  auto D8 = build_groups(2).U;
  out.emplace_back("D8=U3", D8);
  auto Q8 = from_presentation(two_generator({pw(x, 4), concat({pw(y, 2), pw(X, 2)}), concat({{Y, x, y}, {x}})}));
  out.emplace_back("Q8", Q8);
  out.emplace_back("D8xC2", direct_product(D8, C2));
  out.emplace_back("Q8xC2", direct_product(Q8, C2));
  out.emplace_back("D16", from_presentation(two_generator({pw(x, 8), pw(y, 2), concat({{x, y}, {x, y}})})));
  out.emplace_back("Q16", from_presentation(two_generator({pw(x, 8), concat({pw(y, 2), pw(X, 4)}),
                                                           concat({{Y, x, y}, {x}})})));
  out.emplace_back("SD16", from_presentation(two_generator({pw(x, 8), pw(y, 2), concat({{y, x, y}, pw(X, 3)})})));
  out.emplace_back("M16", from_presentation(two_generator({pw(x, 8), pw(y, 2), concat({{y, x, y}, pw(X, 5)})})));
  out.emplace_back("C4:C4", from_presentation(two_generator({pw(x, 4), pw(y, 4), concat({{Y, x, y}, {x}})})));
  // subgroups of U_4 of order <= 16 generated by two elements
  auto U4 = build_groups(3).U;
  std::set<std::vector<Elt>> seen;
  for (Elt a = 1; a < U4.order() && seen.size() < 8; a += 5)
    for (Elt b = a + 1; b < U4.order() && seen.size() < 8; b += 7) {
      auto H = U4.subgroup({a, b});
      if (H.size() < 8 || H.size() > 16 || !seen.insert(H).second) continue;
      out.emplace_back("U4<" + std::to_string(a) + "," + std::to_string(b) + ">", subgroup_table(U4, {a, b}));
    }
  return out;
}

U3CrossCheck u3_lift_vs_cup() {
  U3CrossCheck rep;
  auto g3 = build_groups(2);
  for (const auto& [name, G] : small_two_groups()) {
    ++rep.groups;
    auto chars = characters(G);
    for (const auto& c1 : chars)
      for (const auto& c2 : chars) {
        std::vector<std::uint32_t> h;
        for (Elt g : G.gens()) h.push_back(static_cast<std::uint32_t>(c1[g] | (c2[g] << 1)));
        bool lifts = lift_search(G, h, g3.U, g3.U_abel).has_value();
        if (lifts != cup_vanishes(G, c1, c2)) ++rep.mismatches;
        ++rep.pairs;
      }
  }
  return rep;
}

}  // namespace qm::unipotent
