// SPDX-License-Identifier: Apache-2.0

#include "ratbase/render.hpp"

#include <set>
#include <sstream>

#include "ratbase/transducer.hpp"

namespace ratbase {

namespace {

void check_depth(std::size_t depth) {
  if (depth > kMaxRenderDepth) {
    throw Error(ErrorCode::DepthCap, "render depth " + std::to_string(depth) + " exceeds cap " +
                                         std::to_string(kMaxRenderDepth));
  }
}

struct Edge {
  NodeId from;
  Digit digit;
  NodeId to;
};

// Breadth-first discovery of the states within `depth` steps of the root.
void collect(const Base& base, DigitRange digits, std::size_t depth, std::size_t cap, std::vector<NodeId>& nodes,
             std::vector<Edge>& edges) {
  nodes = {NodeId(0)};
  std::set<NodeId> seen{NodeId(0)};
  std::vector<NodeId> level{NodeId(0)};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<NodeId> next;
    for (const NodeId& n : level) {
      for (Transition& t : successors(base, digits, n)) {
        edges.push_back({n, t.digit, t.target});
        // S_z in small bases has states with several incoming edges
        if (seen.insert(t.target).second) next.push_back(t.target);
      }
    }
    if (nodes.size() + next.size() > cap) {
      throw Error(ErrorCode::FrontierCapExceeded, "render truncation exceeds frontier cap");
    }
    nodes.insert(nodes.end(), next.begin(), next.end());
    level.swap(next);
  }
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string automaton_dot(const Base& base, AutomatonKind kind, std::size_t depth, std::size_t cap) {
  check_depth(depth);
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  collect(base, alphabet(base, kind), depth, cap, nodes, edges);
  std::ostringstream os;
  os << "digraph " << (kind == AutomatonKind::Tree ? "T" : "S") << " {\n";
  os << "  label=" << quote(std::string(kind == AutomatonKind::Tree ? "T" : "S") + " base " + base.to_string()) << ";\n";
  os << "  rankdir=LR;\n  node [shape=circle];\n";
  for (const NodeId& n : nodes) os << "  n" << n.get_str() << " [label=" << quote(n.get_str()) << "];\n";
  for (const Edge& e : edges) {
    os << "  n" << e.from.get_str() << " -> n" << e.to.get_str() << " [label=" << quote(std::to_string(e.digit))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string transducer_dot(const Base& base, std::size_t depth, std::size_t cap) {
  check_depth(depth);
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  collect(base, base.difference_digits(), depth, cap, nodes, edges);
  std::ostringstream os;
  os << "digraph D {\n";
  os << "  label=" << quote("D base " + base.to_string()) << ";\n";
  os << "  rankdir=LR;\n  node [shape=circle];\n";
  for (const NodeId& n : nodes) os << "  n" << n.get_str() << " [label=" << quote(n.get_str()) << "];\n";
  for (const Edge& e : edges) {
    for (const PairLetter& pl : psi(base, e.digit)) {
      os << "  n" << e.from.get_str() << " -> n" << e.to.get_str() << " [label="
         << quote("(" + std::to_string(pl.input) + "," + std::to_string(pl.output) + ")") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string fractal_svg(const Base& base, std::size_t depth, const SvgLayout& layout, bool span_overlay,
                        std::size_t cap) {
  check_depth(depth);
  struct Placed {
    DigitWord label;
    NodeId node;
    BigRational rho;
  };
  // Paths of the representation tree: no leading zero, so every node once.
  std::vector<std::vector<Placed>> levels{{Placed{DigitWord{}, NodeId(0), BigRational(0)}}};
  std::size_t total = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Placed> next;
    for (const Placed& parent : levels.back()) {
      for (Transition& t : successors(base, AutomatonKind::Tree, parent.node)) {
        if (parent.node == 0 && t.digit == 0) continue;
        DigitWord w = parent.label;
        w.digits.push_back(t.digit);
        BigRational rho = eval_real_prefix(base, w.view());
        next.push_back({std::move(w), std::move(t.target), std::move(rho)});
      }
    }
    total += next.size();
    if (total > cap) throw Error(ErrorCode::FrontierCapExceeded, "render truncation exceeds frontier cap");
    levels.push_back(std::move(next));
  }

  BigRational max_rho = 0;
  for (const auto& level : levels) {
    for (const Placed& pl : level) {
      if (pl.rho > max_rho) max_rho = pl.rho;
    }
  }
  const BigRational x_step(layout.x_step);
  const BigRational y_scale(layout.y_scale);
  const BigRational margin(layout.margin);
  auto x_of = [&](std::size_t d) { return to_decimal(x_step * BigRational(static_cast<long>(d)), layout.precision); };
  auto y_of = [&](const BigRational& rho) { return to_decimal(y_scale * rho, layout.precision); };
  const DigitRange kept = base.difference_digits();

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << to_decimal(2 * margin + x_step * BigRational(static_cast<long>(depth)), 0) << "\" height=\""
     << to_decimal(2 * margin + y_scale * max_rho, 0) << "\" data-base=\"" << base.to_string() << "\">\n";
  os << "<g transform=\"translate(" << to_decimal(margin, layout.precision) << " " << to_decimal(margin, layout.precision)
     << ")\">\n";
  os << "  <g stroke=\"black\" fill=\"none\">\n";
  for (std::size_t d = 1; d < levels.size(); ++d) {
    for (const Placed& child : levels[d]) {
      const Digit a = child.label.digits.back();
      DigitWord parent_label = child.label;
      parent_label.digits.pop_back();
      const BigRational parent_rho = eval_real_prefix(base, parent_label.view());
      os << "    <line x1=\"" << x_of(d - 1) << "\" y1=\"" << y_of(parent_rho) << "\" x2=\"" << x_of(d) << "\" y2=\""
         << y_of(child.rho) << "\" data-digit=\"" << a << "\"";
      if (span_overlay && !kept.contains(a)) os << " stroke-dasharray=\"4 3\" data-deleted=\"true\"";
      os << "/>\n";
    }
  }
  os << "  </g>\n";
  for (std::size_t d = 0; d < levels.size(); ++d) {
    for (const Placed& pl : levels[d]) {
      os << "  <g class=\"node\" data-node=\"" << pl.node.get_str() << "\" data-word=\"" << format_digits(pl.label)
         << "\" data-rho=\"" << to_decimal(pl.rho, layout.precision) << "\">";
      os << "<circle cx=\"" << x_of(d) << "\" cy=\"" << y_of(pl.rho) << "\" r=\"3\"/>";
      os << "<text x=\"" << x_of(d) << "\" y=\"" << y_of(pl.rho) << "\" dx=\"5\" font-size=\"10\">"
         << pl.node.get_str() << "</text></g>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ratbase
