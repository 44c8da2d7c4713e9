#include "grpforge/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grpforge {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  std::size_t line_of(std::size_t p) const {
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + p, '\n'));
  }
  std::size_t col_of(std::size_t p) const {
    auto nl = text.rfind('\n', p == 0 ? 0 : p - 1);
    return nl == std::string::npos ? p + 1 : p - nl;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_of(pos), col_of(pos), msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }
  u32 integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    u64 v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos;
    }
    return static_cast<u32>(v);
  }
  std::string identifier() {
    skip_ws();
    std::string s;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) s += text[pos++];
    return s;
  }
};

// UTF-8 for the semidirect product sign.
const std::string kRtimes = "⋊";

GroupSpec parse_spec(Lexer& lx);

GroupSpec parse_term(Lexer& lx) {
  GroupSpec s;
  if (lx.consume("(")) {
    s = parse_spec(lx);
    if (!lx.consume(")")) lx.fail("expected ')'");
    return s;
  }
  if (lx.consume("perm[")) {
    s.kind = GroupSpec::Kind::Perm;
    do {
      std::vector<std::vector<u32>> cycles;
      while (lx.peek() == '(') {
        lx.consume("(");
        std::vector<u32> cyc;
        while (lx.peek() != ')') {
          u32 v = lx.integer();
          if (v < 1) lx.fail("permutation points are 1-based");
          cyc.push_back(v);
        }
        lx.consume(")");
        if (cyc.empty()) lx.fail("empty cycle");
        std::set<u32> distinct(cyc.begin(), cyc.end());
        if (distinct.size() != cyc.size()) lx.fail("point repeated within a cycle");
        cycles.push_back(std::move(cyc));
      }
      if (cycles.empty()) lx.fail("expected cycle");
      s.perm_gens.push_back(std::move(cycles));
    } while (lx.consume(","));
    if (!lx.consume("]")) lx.fail("expected ']'");
    return s;
  }
  if (lx.consume("Q8")) {
    s.kind = GroupSpec::Kind::Q8;
    return s;
  }
  char c = lx.peek();
  if (c == 'C' || c == 'S' || c == 'D') {
    ++lx.pos;
    s.kind = c == 'C'   ? GroupSpec::Kind::Cyclic
             : c == 'S' ? GroupSpec::Kind::Symmetric
                        : GroupSpec::Kind::Dihedral;
    s.param = lx.integer();
    if (s.param < 1) lx.fail("atom parameter must be >= 1");
    if (s.kind == GroupSpec::Kind::Dihedral && (s.param < 4 || s.param % 2 != 0))
      lx.fail("dihedral atom takes the group order (even, >= 4)");
    return s;
  }
  lx.fail("expected group term");
}

GroupSpec parse_spec(Lexer& lx) {
  GroupSpec left = parse_term(lx);
  for (;;) {
    bool direct = false, semi = false;
    std::string action;
    lx.skip_ws();
    if (lx.consume(kRtimes) || lx.consume(":")) {
      semi = true;
    } else if (lx.pos < lx.text.size() && lx.text[lx.pos] == 'x') {
      // 'x' is the direct product only when not starting an identifier
      std::size_t nxt = lx.pos + 1;
      if (nxt >= lx.text.size() || !std::isalnum(static_cast<unsigned char>(lx.text[nxt]))) {
        ++lx.pos;
        direct = true;
      }
    }
    if (!direct && !semi) break;
    if (semi && lx.consume("[")) {
      action = lx.identifier();
      if (!lx.consume("]")) lx.fail("expected ']' after action name");
    }
    GroupSpec right = parse_term(lx);
    GroupSpec combined;
    combined.kind = semi ? GroupSpec::Kind::Semidirect : GroupSpec::Kind::Direct;
    combined.action_name = action;
    combined.children.push_back(std::move(left));
    combined.children.push_back(std::move(right));
    left = std::move(combined);
  }
  return left;
}

std::vector<u32> cycles_to_images(const std::vector<std::vector<u32>>& cycles, u32 points,
                                  Lexer& lx) {
  std::vector<u32> img(points);
  for (u32 i = 0; i < points; ++i) img[i] = i;
  for (const auto& cyc : cycles) {
    std::vector<bool> seen(points, false);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      u32 from = cyc[i] - 1;
      u32 to = cyc[(i + 1) % cyc.size()] - 1;
      if (seen[from]) lx.fail("point repeated within a cycle product");
      seen[from] = true;
      img[from] = to;
    }
  }
  // cycles within one generator must be disjoint to give a bijection
  std::vector<bool> hit(points, false);
  for (u32 v : img) {
    if (hit[v]) throw ParseError(1, 1, "overlapping cycles do not define a permutation");
    hit[v] = true;
  }
  return img;
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(param);
    case Kind::Symmetric: return "S" + std::to_string(param);
    case Kind::Dihedral: return "D" + std::to_string(param);
    case Kind::Q8: return "Q8";
    case Kind::Perm: return "perm[...]";
    case Kind::Direct: return "(" + children[0].to_string() + " x " + children[1].to_string() + ")";
    case Kind::Semidirect:
      return "(" + children[0].to_string() + " : " + children[1].to_string() + ")";
  }
  return "?";
}

GroupSpec parse_group_spec(const std::string& text) {
  Lexer lx{text};
  GroupSpec s = parse_spec(lx);
  if (!lx.eof()) lx.fail("unexpected trailing input");
  return s;
}

GroupPtr realize_spec(const GroupSpec& spec, std::size_t bound) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return ConcreteGroup::realize(cyclic_backend(spec.param), bound);
    case GroupSpec::Kind::Symmetric:
      return ConcreteGroup::realize(symmetric_backend(spec.param), bound);
    case GroupSpec::Kind::Dihedral:
      return ConcreteGroup::realize(dihedral_backend(spec.param), bound);
    case GroupSpec::Kind::Q8:
      return ConcreteGroup::realize(quaternion8_backend(), bound);
    case GroupSpec::Kind::Perm: {
      u32 points = 0;
      for (const auto& gen : spec.perm_gens)
        for (const auto& cyc : gen)
          for (u32 v : cyc) points = std::max(points, v);
      Lexer dummy{""};
      std::vector<std::vector<u32>> images;
      for (const auto& gen : spec.perm_gens) images.push_back(cycles_to_images(gen, points, dummy));
      return ConcreteGroup::realize(perm_backend(images), bound);
    }
    case GroupSpec::Kind::Direct:
      return direct_product(realize_spec(spec.children[0], bound),
                            realize_spec(spec.children[1], bound), bound);
    case GroupSpec::Kind::Semidirect: {
      GroupPtr normal = realize_spec(spec.children[0], bound);
      GroupPtr acting = realize_spec(spec.children[1], bound);
      if (!spec.action_name.empty() && spec.action_name != "hol")
        throw InvalidAction("unknown action name: " + spec.action_name);
      // "hol" and the default both resolve to the faithful cyclic power action.
      auto action = cyclic_power_action(normal, acting);
      return semidirect(normal, acting, action, bound);
    }
  }
  throw std::logic_error("realize_spec: unreachable");
}

GroupPtr realize_spec_text(const std::string& text, std::size_t bound) {
  return realize_spec(parse_group_spec(text), bound);
}

}  // namespace grpforge
