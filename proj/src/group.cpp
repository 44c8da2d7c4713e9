#include "grpforge/group.hpp"

#include <algorithm>
#include <numeric>

namespace grpforge {

std::string pack(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    out += std::to_string(p.size());
    out += ':';
    out += p;
  }
  return out;
}

std::vector<std::string> unpack(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t colon = s.find(':', i);
    if (colon == std::string::npos) throw std::invalid_argument("unpack: malformed string");
    std::size_t len = std::stoul(s.substr(i, colon - i));
    parts.push_back(s.substr(colon + 1, len));
    i = colon + 1 + len;
  }
  return parts;
}

GroupPtr ConcreteGroup::realize(GroupBackend backend, std::size_t bound) {
  auto g = std::shared_ptr<ConcreteGroup>(new ConcreteGroup());
  g->backend_ = std::move(backend);

  g->names_.push_back(g->backend_.identity);
  g->index_[g->backend_.identity] = 0;
  g->bfs_link_.emplace_back(0, UINT32_MAX);
  for (std::size_t head = 0; head < g->names_.size(); ++head) {
    for (u32 gi = 0; gi < g->backend_.generators.size(); ++gi) {
      std::string prod = g->backend_.mul(g->names_[head], g->backend_.generators[gi]);
      auto [it, inserted] = g->index_.try_emplace(prod, static_cast<u32>(g->names_.size()));
      if (inserted) {
        g->names_.push_back(std::move(prod));
        g->bfs_link_.emplace_back(static_cast<u32>(head), gi);
        if (g->names_.size() > bound)
          throw BoundExceeded("realize: enumeration bound exceeded for " + g->backend_.label);
      }
    }
  }

  const std::size_t n = g->names_.size();
  g->gen_idx_.reserve(g->backend_.generators.size());
  for (const auto& s : g->backend_.generators) g->gen_idx_.push_back(g->index_.at(s));

  if (n <= kTableCap) {
    // Right-multiplication rows: R_g for generators via the backend, then
    // R_{xg} = R_g o R_x along the BFS tree.
    g->table_.assign(n * n, 0);
    std::vector<std::vector<std::uint16_t>> rows(n);
    rows[0].resize(n);
    for (std::size_t y = 0; y < n; ++y) rows[0][y] = static_cast<std::uint16_t>(y);
    for (u32 gi = 0; gi < g->gen_idx_.size(); ++gi) {
      u32 e = g->gen_idx_[gi];
      if (!rows[e].empty()) continue;
      rows[e].resize(n);
      for (std::size_t y = 0; y < n; ++y)
        rows[e][y] = static_cast<std::uint16_t>(
            g->index_.at(g->backend_.mul(g->names_[y], g->names_[e])));
    }
    for (u32 e = 1; e < n; ++e) {
      if (!rows[e].empty()) continue;
      auto [parent, gi] = g->bfs_link_[e];
      const auto& rp = rows[parent];
      const auto& rg = rows[g->gen_idx_[gi]];
      rows[e].resize(n);
      for (std::size_t y = 0; y < n; ++y) rows[e][y] = rg[rp[y]];
    }
    for (u32 e = 0; e < n; ++e)
      std::copy(rows[e].begin(), rows[e].end(), g->table_.begin() + static_cast<std::size_t>(e) * n);
  }

  g->inv_.assign(n, 0);
  for (u32 a = 0; a < n; ++a) {
    if (g->has_table()) {
      bool found = false;
      for (u32 b = 0; b < n; ++b)
        if (g->mul(a, b) == 0) {
          g->inv_[a] = b;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("realize: element without inverse");
    } else {
      u32 x = a, prev = 0;
      while (x != 0) {
        prev = x;
        x = g->index_.at(g->backend_.mul(g->names_[x], g->names_[a]));
      }
      g->inv_[a] = a == 0 ? 0 : prev;
    }
  }

  g->check_axioms();
  return g;
}

u32 ConcreteGroup::mul(u32 a, u32 b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(b) * names_.size() + a];
  return index_.at(backend_.mul(names_[a], names_[b]));
}

u32 ConcreteGroup::power(u32 a, i64 e) const {
  if (e < 0) return power(inv(a), -e);
  u32 r = 0, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

u32 ConcreteGroup::element_order(u32 a) const {
  if (orders_.empty()) orders_.assign(order(), 0);
  if (orders_[a] != 0) return orders_[a];
  u32 ord = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  orders_[a] = ord;
  return ord;
}

std::optional<u32> ConcreteGroup::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<u32> ConcreteGroup::word_of(u32 e) const {
  std::vector<u32> word;
  while (e != 0) {
    auto [parent, gi] = bfs_link_[e];
    word.push_back(gi);
    e = parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

const ConcreteGroup::Classes& ConcreteGroup::classes() const {
  if (classes_) return *classes_;
  auto cls = std::make_unique<Classes>();
  const u32 n = static_cast<u32>(order());
  cls->class_of.assign(n, UINT32_MAX);
  for (u32 x = 0; x < n; ++x) {
    if (cls->class_of[x] != UINT32_MAX) continue;
    u32 id = static_cast<u32>(cls->members.size());
    std::vector<u32> orbit;
    for (u32 g = 0; g < n; ++g) {
      u32 y = conj(g, x);
      if (cls->class_of[y] == UINT32_MAX) {
        cls->class_of[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cls->members.push_back(std::move(orbit));
  }
  classes_ = std::move(cls);
  return *classes_;
}

std::size_t ConcreteGroup::centralizer_order(u32 x) const {
  const auto& cls = classes();
  return order() / cls.members[cls.class_of[x]].size();
}

std::vector<u32> ConcreteGroup::center() const {
  std::vector<u32> z;
  const auto& cls = classes();
  for (u32 x = 0; x < order(); ++x)
    if (cls.members[cls.class_of[x]].size() == 1) z.push_back(x);
  return z;
}

std::vector<u32> ConcreteGroup::subgroup_closure(const std::vector<u32>& seeds) const {
  std::vector<bool> seen(order(), false);
  std::vector<u32> elems{0};
  seen[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (u32 s : seeds) {
      u32 y = mul(elems[head], s);
      if (!seen[y]) {
        seen[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool ConcreteGroup::is_abelian() const {
  for (u32 a : gen_idx_)
    for (u32 b : gen_idx_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

static u64 fnv1a(u64 h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

u64 ConcreteGroup::enumeration_fingerprint() const {
  u64 h = 0xcbf29ce484222325ULL;
  for (const auto& s : names_) {
    h = fnv1a(h, s.data(), s.size());
    h = fnv1a(h, "\x1f", 1);
  }
  return h;
}

u64 ConcreteGroup::table_fingerprint() const {
  u64 h = 0xcbf29ce484222325ULL;
  const u32 n = static_cast<u32>(order());
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) {
      u32 v = mul(a, b);
      h = fnv1a(h, &v, sizeof v);
    }
  return h;
}

void ConcreteGroup::check_axioms(std::size_t samples) const {
  const u32 n = static_cast<u32>(order());
  for (u32 a = 0; a < n; ++a) {
    if (mul(a, 0) != a || mul(0, a) != a)
      throw std::logic_error("group axioms: identity failure in " + backend_.label);
    if (mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
      throw std::logic_error("group axioms: inverse failure in " + backend_.label);
  }
  auto check_triple = [&](u32 a, u32 b, u32 c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::logic_error("group axioms: associativity failure in " + backend_.label);
  };
  if (static_cast<u64>(n) * n * n <= 1000000) {
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b)
        for (u32 c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<u32> dist(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) check_triple(dist(rng), dist(rng), dist(rng));
  }
}

ActionMap::ActionMap(GroupPtr acting, GroupPtr target, std::vector<std::vector<u32>> generator_images)
    : acting_(std::move(acting)), target_(std::move(target)), gen_images_(std::move(generator_images)) {
  if (gen_images_.size() != acting_->generators().size())
    throw InvalidAction("ActionMap: one permutation per acting generator required");
  cache_.resize(acting_->order());
}

const std::vector<u32>& ActionMap::perm_of(u32 acting_element) const {
  auto& slot = cache_[acting_element];
  if (!slot.empty()) return slot;
  std::vector<u32> perm(target_->order());
  for (u32 i = 0; i < perm.size(); ++i) perm[i] = i;
  for (u32 gi : acting_->word_of(acting_element)) {
    const auto& step = gen_images_[gi];
    for (auto& x : perm) x = step[x];
  }
  slot = std::move(perm);
  return slot;
}

void ActionMap::validate(std::size_t pair_bound) const {
  const u32 tn = static_cast<u32>(target_->order());
  for (const auto& perm : gen_images_) {
    if (perm.size() != tn) throw InvalidAction("ActionMap: permutation size mismatch");
    std::vector<bool> hit(tn, false);
    for (u32 x : perm) {
      if (x >= tn || hit[x]) throw InvalidAction("ActionMap: image not a bijection");
      hit[x] = true;
    }
    if (perm[0] != 0) throw InvalidAction("ActionMap: image does not fix the identity");
    if (static_cast<u64>(tn) * tn <= pair_bound) {
      for (u32 a = 0; a < tn; ++a)
        for (u32 b = 0; b < tn; ++b)
          if (perm[target_->mul(a, b)] != target_->mul(perm[a], perm[b]))
            throw InvalidAction("ActionMap: image not a homomorphism");
    } else {
      for (u32 a : target_->generators())
        for (u32 b = 0; b < tn; ++b)
          if (perm[target_->mul(a, b)] != target_->mul(perm[a], perm[b]))
            throw InvalidAction("ActionMap: image not a homomorphism on generators");
    }
  }
  // Homomorphism property of the action itself.
  const u32 an = static_cast<u32>(acting_->order());
  if (static_cast<u64>(an) * an * tn <= pair_bound) {
    for (u32 a = 0; a < an; ++a)
      for (u32 b = 0; b < an; ++b) {
        const auto& pa = perm_of(a);
        const auto& pb = perm_of(b);
        const auto& pab = perm_of(acting_->mul(a, b));
        for (u32 x = 0; x < tn; ++x)
          if (pab[x] != pa[pb[x]]) throw InvalidAction("ActionMap: action not a homomorphism");
      }
  } else {
    for (u32 a : acting_->generators())
      for (u32 b : acting_->generators()) {
        const auto& pa = perm_of(a);
        const auto& pb = perm_of(b);
        const auto& pab = perm_of(acting_->mul(a, b));
        for (u32 x = 0; x < tn; ++x)
          if (pab[x] != pa[pb[x]])
            throw InvalidAction("ActionMap: action not a homomorphism on generators");
      }
  }
}

GroupBackend cyclic_backend(u32 m) {
  if (m < 1) throw std::invalid_argument("cyclic_backend: m >= 1 required");
  GroupBackend b;
  b.label = "C" + std::to_string(m);
  b.identity = "0";
  if (m > 1) b.generators = {"1"};
  b.mul = [m](const std::string& x, const std::string& y) {
    return std::to_string((std::stoul(x) + std::stoul(y)) % m);
  };
  return b;
}

static std::string perm_name(const std::vector<u32>& img) {
  std::string s;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(img[i]);
  }
  return s;
}

static std::vector<u32> perm_parse(const std::string& s) {
  std::vector<u32> img;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    img.push_back(static_cast<u32>(std::stoul(s.substr(i, j - i))));
    i = j + 1;
  }
  return img;
}

static GroupBackend perm_backend_impl(std::string label, u32 points,
                                      const std::vector<std::vector<u32>>& gens) {
  GroupBackend b;
  b.label = std::move(label);
  std::vector<u32> id(points);
  for (u32 i = 0; i < points; ++i) id[i] = i;
  b.identity = perm_name(id);
  for (const auto& g : gens) b.generators.push_back(perm_name(g));
  b.mul = [](const std::string& x, const std::string& y) {
    auto a = perm_parse(x), c = perm_parse(y);
    std::vector<u32> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c[a[i]];  // x then y
    return perm_name(r);
  };
  return b;
}

GroupBackend symmetric_backend(u32 m) {
  if (m < 1) throw std::invalid_argument("symmetric_backend: m >= 1 required");
  std::vector<std::vector<u32>> gens;
  if (m >= 2) {
    std::vector<u32> t(m);
    for (u32 i = 0; i < m; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (m >= 3) {
    std::vector<u32> c(m);
    for (u32 i = 0; i < m; ++i) c[i] = (i + 1) % m;
    gens.push_back(c);
  }
  return perm_backend_impl("S" + std::to_string(m), m, gens);
}

GroupBackend dihedral_backend(u32 order) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("dihedral_backend: even order >= 4 required");
  u32 m = order / 2;
  if (m == 2) {
    // Klein four group; reflection and rotation coincide on 2 points
    return perm_backend_impl("D4", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  }
  std::vector<u32> rot(m), refl(m);
  for (u32 i = 0; i < m; ++i) rot[i] = (i + 1) % m;
  for (u32 i = 0; i < m; ++i) refl[i] = (m - i) % m;
  return perm_backend_impl("D" + std::to_string(order), m, {rot, refl});
}

GroupBackend quaternion8_backend() {
  // Q8 as permutations on 8 points (left translations on itself).
  // Element order: 1,-1,i,-i,j,-j,k,-k.
  static const int tbl[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5}, {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1}};
  // Right-translation permutations x -> x*g, so composition in the perm
  // backend (x then y) matches group multiplication g*h.
  std::vector<u32> ri(8), rj(8);
  for (u32 x = 0; x < 8; ++x) {
    ri[x] = static_cast<u32>(tbl[x][2]);
    rj[x] = static_cast<u32>(tbl[x][4]);
  }
  return perm_backend_impl("Q8", 8, {ri, rj});
}

GroupBackend perm_backend(const std::vector<std::vector<u32>>& generator_images) {
  if (generator_images.empty())
    throw std::invalid_argument("perm_backend: at least one generator required");
  u32 points = static_cast<u32>(generator_images.front().size());
  for (const auto& g : generator_images)
    if (g.size() != points)
      throw std::invalid_argument("perm_backend: generators act on different point sets");
  return perm_backend_impl("perm", points, generator_images);
}

GroupBackend direct_product_backend(GroupPtr a, GroupPtr b) {
  GroupBackend out;
  out.label = a->label() + " x " + b->label();
  out.identity = pack({a->name(0), b->name(0)});
  for (u32 g : a->generators()) out.generators.push_back(pack({a->name(g), b->name(0)}));
  for (u32 g : b->generators()) out.generators.push_back(pack({a->name(0), b->name(g)}));
  out.mul = [a, b](const std::string& x, const std::string& y) {
    auto px = unpack(x), py = unpack(y);
    u32 xa = *a->find(px[0]), ya = *a->find(py[0]);
    u32 xb = *b->find(px[1]), yb = *b->find(py[1]);
    return pack({a->name(a->mul(xa, ya)), b->name(b->mul(xb, yb))});
  };
  return out;
}

GroupBackend semidirect_backend(GroupPtr normal, GroupPtr acting,
                                std::shared_ptr<const ActionMap> action) {
  GroupBackend out;
  out.label = normal->label() + " : " + acting->label();
  out.identity = pack({normal->name(0), acting->name(0)});
  for (u32 g : normal->generators()) out.generators.push_back(pack({normal->name(g), acting->name(0)}));
  for (u32 g : acting->generators()) out.generators.push_back(pack({normal->name(0), acting->name(g)}));
  out.mul = [normal, acting, action](const std::string& x, const std::string& y) {
    auto px = unpack(x), py = unpack(y);
    u32 nx = *normal->find(px[0]), ny = *normal->find(py[0]);
    u32 ax = *acting->find(px[1]), ay = *acting->find(py[1]);
    u32 n2 = normal->mul(nx, action->perm_of(ax)[ny]);
    u32 a2 = acting->mul(ax, ay);
    return pack({normal->name(n2), acting->name(a2)});
  };
  return out;
}

GroupPtr semidirect(GroupPtr normal, GroupPtr acting, std::shared_ptr<const ActionMap> action,
                    std::size_t bound) {
  action->validate();
  return ConcreteGroup::realize(semidirect_backend(normal, acting, action), bound);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t bound) {
  return ConcreteGroup::realize(direct_product_backend(a, b), bound);
}

std::shared_ptr<const ActionMap> cyclic_power_action(GroupPtr normal_cyclic, GroupPtr acting_cyclic) {
  u32 m = static_cast<u32>(normal_cyclic->order());
  u32 k = static_cast<u32>(acting_cyclic->order());
  u32 s = 0;
  for (u32 cand = 2; cand < m; ++cand) {
    if (std::gcd(cand, m) != 1) continue;
    if (multiplicative_order(cand, m) == k) {
      s = cand;
      break;
    }
  }
  if (s == 0)
    throw InvalidAction("cyclic_power_action: no action of order " + std::to_string(k) +
                        " on C" + std::to_string(m));
  std::vector<u32> perm(m);
  for (u32 x = 0; x < m; ++x) {
    u32 img = static_cast<u32>(static_cast<u64>(std::stoul(normal_cyclic->name(x))) * s % m);
    perm[x] = *normal_cyclic->find(std::to_string(img));
  }
  std::vector<std::vector<u32>> images;
  for (std::size_t i = 0; i < acting_cyclic->generators().size(); ++i) images.push_back(perm);
  return std::make_shared<const ActionMap>(acting_cyclic, normal_cyclic, images);
}

}  // namespace grpforge
