// Small tour of the library: pass a group spec (default zn:36).

#include <iostream>

#include "pgk/verify.hpp"

using namespace pgk;

int main(int argc, char **argv) {
  try {
    auto g = build_group(argc > 1 ? argv[1] : "zn:36");
    auto pg = build_power_graph(g);
    CyclicClassGraph cg(g);
    std::cout << g.name() << ": order " << g.order() << ", " << pg.graph.edge_count() << " edges, " << cg.size()
              << " cyclic classes\n";

    std::cout << "classes:";
    for (const auto &c : cg.classes()) std::cout << ' ' << class_label(c);
    std::cout << '\n';

    auto clique = max_clique(pg.graph);
    std::cout << "clique number " << clique.size() << ", chromatic number " << chromatic_number(pg.graph).colours
              << ", largest Psi over element orders " << general_group_clique_number(g) << '\n';

    auto ch = is_chordal(pg.graph);
    if (ch.chordal) {
      std::cout << "chordal\n";
    } else {
      std::cout << "not chordal, hole:";
      for (Vertex v : *ch.hole) std::cout << ' ' << g.label(v);
      std::cout << '\n';
    }
    std::cout << (is_planar(pg.graph) ? "planar" : "not planar") << '\n';

    auto holes = summarize_holes(pg.graph);
    for (const auto &[len, s] : holes.by_length) std::cout << "holes of length " << len << ": " << s.count << '\n';

    auto outcomes = run_checks(all_theorem_ids(), g, Limits{});
    auto counts = count_statuses(outcomes);
    std::cout << "catalogue: " << counts.pass << " pass, " << counts.fail << " fail, " << counts.skip << " skip, "
              << counts.unknown << " unknown\n";
    for (const auto &o : outcomes)
      if (o.status == Status::fail) std::cout << "  fail " << o.theorem << '\n';
  } catch (const std::exception &e) {
    std::cerr << "explore: " << e.what() << '\n';
    return 2;
  }
}
