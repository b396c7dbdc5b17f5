#include <algorithm>
#include <memory>
#include <tuple>

#include "simulgame/error.hpp"
#include "simulgame/rulesets.hpp"
#include "simulgame/sums.hpp"

namespace simulgame::rulesets {

namespace {

std::vector<HbEdge> grounded(std::vector<HbEdge> edges) {
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);

  std::vector<int> reached{0};
  std::vector<bool> keep(edges.size(), false);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (keep[i]) continue;
      bool hu = std::find(reached.begin(), reached.end(), edges[i].u) != reached.end();
      bool hv = std::find(reached.begin(), reached.end(), edges[i].v) != reached.end();
      if (!hu && !hv) continue;
      keep[i] = true;
      grew = true;
      if (!hu) reached.push_back(edges[i].u);
      if (!hv) reached.push_back(edges[i].v);
    }
  }
  std::vector<HbEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) out.push_back(std::move(edges[i]));
  std::sort(out.begin(), out.end(), [](const HbEdge& a, const HbEdge& b) {
    return std::tie(a.u, a.v, a.color, a.name) < std::tie(b.u, b.v, b.color, b.name);
  });
  return out;
}

std::string hb_key(const std::vector<HbEdge>& edges) {
  std::string s = "hb{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v) + ":" +
         static_cast<char>(edges[i].color);
  }
  return s + "}";
}

bool playable_by(EdgeColor edge, EdgeColor own) { return edge == own || edge == EdgeColor::Green; }

EdgeColor color_from(char c) {
  switch (c) {
    case 'B': return EdgeColor::Blue;
    case 'R': return EdgeColor::Red;
    case 'G': return EdgeColor::Green;
    default: throw Error(ErrorCode::BadLiteral, std::string("edge color '") + c + "' is not B, R or G");
  }
}

std::vector<HbEdge> without(const std::vector<HbEdge>& edges, std::size_t a, std::size_t b) {
  std::vector<HbEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != a && i != b) out.push_back(edges[i]);
  return out;
}

}  // namespace

HackenbushGame::HackenbushGame(std::vector<HbEdge> edges)
    : Game("hb", hb_key(edges = grounded(std::move(edges)))), edges_(std::move(edges)) {}

std::vector<std::size_t> HackenbushGame::playable(EdgeColor own) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (playable_by(edges_[i].color, own)) out.push_back(i);
  return out;
}

bool HackenbushGame::has_left_moves() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const HbEdge& e) { return playable_by(e.color, EdgeColor::Blue); });
}

bool HackenbushGame::has_right_moves() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const HbEdge& e) { return playable_by(e.color, EdgeColor::Red); });
}

OptionList HackenbushGame::left_options() const {
  OptionList out;
  for (std::size_t i : playable(EdgeColor::Blue))
    out.add(edges_[i].name, std::make_shared<HackenbushGame>(without(edges_, i, i)));
  return out;
}

OptionList HackenbushGame::right_options() const {
  OptionList out;
  for (std::size_t i : playable(EdgeColor::Red))
    out.add(edges_[i].name, std::make_shared<HackenbushGame>(without(edges_, i, i)));
  return out;
}

Position HackenbushGame::simultaneous(std::size_t left, std::size_t right) const {
  std::size_t a = playable(EdgeColor::Blue).at(left);
  std::size_t b = playable(EdgeColor::Red).at(right);
  return std::make_shared<HackenbushGame>(without(edges_, a, b));
}

Rational HackenbushGame::terminal_score() const { return hackenbush_score(*this); }

std::optional<std::string> HackenbushGame::stalk_colors() const {
  std::string colors;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != static_cast<int>(i) || edges_[i].v != static_cast<int>(i) + 1) return std::nullopt;
    colors += static_cast<char>(edges_[i].color);
  }
  return colors;
}

std::string HackenbushGame::render() const {
  if (auto s = stalk_colors()) return "hb[" + *s + "]";
  std::string out = "hb{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ", ";
    out += edges_[i].name + "=" + std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v) + ":" +
           static_cast<char>(edges_[i].color);
  }
  return out + "}";
}

Position make_hackenbush(std::vector<HbEdge> edges) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u == e.v)
      throw Error(ErrorCode::BadLiteral, "hackenbush edge " + e.name + " has bad endpoints");
  }
  return std::make_shared<HackenbushGame>(std::move(edges));
}

Position make_stalk(std::string_view colors) {
  std::vector<HbEdge> edges;
  for (std::size_t i = 0; i < colors.size(); ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, color_from(colors[i]),
                     "e" + std::to_string(i + 1)});
  return make_hackenbush(std::move(edges));
}

Position make_cordon(int n, const std::vector<CordonLeaf>& leaves, EdgeColor stalk_color) {
  if (n < 1) throw Error(ErrorCode::BadCordonSpec, "cordon height must be >= 1");
  int prev = 1;
  for (const auto& leaf : leaves) {
    if (leaf.attach < 1 || leaf.attach > n - 1)
      throw Error(ErrorCode::BadCordonSpec, "attachment v" + std::to_string(leaf.attach) +
                                                " outside v1..v" + std::to_string(n - 1));
    if (leaf.attach < prev)
      throw Error(ErrorCode::BadCordonSpec, "attachments must be listed in increasing order");
    prev = leaf.attach;
  }
  std::vector<HbEdge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i - 1, i, stalk_color, "s" + std::to_string(i)});
  for (std::size_t j = 0; j < leaves.size(); ++j) {
    int leaf_vertex = n + 1 + static_cast<int>(j);
    edges.push_back({leaves[j].attach, leaf_vertex, leaves[j].color, "l" + std::to_string(j + 1)});
  }
  return make_hackenbush(std::move(edges));
}

Position hackenbush_simultaneous(const HackenbushGame& p, std::string_view left_edge,
                                 std::string_view right_edge) {
  const auto& edges = p.edges();
  auto find = [&](std::string_view name, EdgeColor own) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].name == name) {
        if (!playable_by(edges[i].color, own))
          throw Error(ErrorCode::IllegalMove, "edge " + std::string(name) + " has the wrong color");
        return i;
      }
    throw Error(ErrorCode::IllegalMove, "no edge named " + std::string(name));
  };
  std::size_t a = find(left_edge, EdgeColor::Blue);
  std::size_t b = find(right_edge, EdgeColor::Red);
  return std::make_shared<HackenbushGame>(without(edges, a, b));
}

Rational hackenbush_score(const HackenbushGame& p) {
  if (!p.is_terminal()) throw Error(ErrorCode::NotTerminal, p.render() + " still has moves for both");
  long blue = 0, red = 0;
  for (const auto& e : p.edges()) {
    if (e.color == EdgeColor::Blue) ++blue;
    if (e.color == EdgeColor::Red) ++red;
  }
  if (red == 0) return blue;
  if (blue == 0) return -red;
  return sums::v_A(p);
}

Position hackenbush_swap(const HackenbushGame& p) {
  std::vector<HbEdge> edges = p.edges();
  for (auto& e : edges) {
    if (e.color == EdgeColor::Blue) e.color = EdgeColor::Red;
    else if (e.color == EdgeColor::Red) e.color = EdgeColor::Blue;
  }
  return make_hackenbush(std::move(edges));
}

Position fig5_g() {
  return make_hackenbush({{0, 1, EdgeColor::Blue, "x"},
                          {1, 2, EdgeColor::Red, "z"},
                          {0, 3, EdgeColor::Blue, "y"},
                          {3, 4, EdgeColor::Red, "w"}});
}

Position fig5_h() {
  return make_hackenbush({{0, 1, EdgeColor::Blue, "x'"},
                          {1, 2, EdgeColor::Red, "z'"},
                          {0, 3, EdgeColor::Blue, "y'"},
                          {3, 4, EdgeColor::Blue, "w'"}});
}

}  // namespace simulgame::rulesets
