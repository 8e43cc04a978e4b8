// edgebetti: command-line front end.
//
// Graphs are given as graph6 strings or as named families "family:params"
// (e.g. cycle:7, cluster:2,2,3, heawood:). A leading '!' takes the complement.
// Single-graph verbs read one positional graph; without it they read graph6
// lines from standard input and process each in turn.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgebetti/edgebetti.hpp"
#include "edgebetti/io.hpp"

namespace eb = edgebetti;

namespace {

struct Globals {
  std::uint32_t prime = 2;
  int jobs = 1;
  bool as_json = false;
};

eb::Graph parse_graph(std::string text) {
  bool negate = false;
  if (!text.empty() && text[0] == '!') {
    negate = true;
    text.erase(0, 1);
  }
  eb::Graph g;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    std::vector<int> params;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ','))
      if (!item.empty()) {
        try {
          params.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw eb::input_error("bad parameter '" + item + "' in " + text);
        }
      }
    g = eb::named(text.substr(0, colon), params);
  } else {
    g = eb::from_graph6(text);
  }
  return negate ? eb::complement(g) : g;
}

std::vector<eb::Graph> input_graphs(const std::string& positional) {
  if (!positional.empty()) return {parse_graph(positional)};
  std::vector<eb::Graph> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    out.push_back(parse_graph(line));
  }
  if (out.empty()) throw eb::input_error("no graph given (positional argument or graph6 lines on stdin)");
  return out;
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
  std::string s;
  for (auto [a, b] : pairs) s += (s.empty() ? "" : " ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return s;
}

void print_json(const eb::json& j) { std::cout << j.dump(2) << '\n'; }

int default_jobs() {
  if (const char* env = std::getenv("EDGEBETTI_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Reference rows for complement(Heawood).
const std::vector<std::uint64_t> heawood_row2{70, 476, 1617, 3388, 4648, 4184, 2394, 826, 161, 14};
const std::vector<std::uint64_t> heawood_row3{28, 224, 777, 1442, 1547, 994, 385, 84, 8};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of edge ideals, templates and parabolic clusters"};
  app.require_subcommand(1);
  Globals opt;
  opt.jobs = default_jobs();
  app.add_option("--p,--field", opt.prime, "field characteristic (prime); census-type verbs use --p for the offset, so give --field there")
      ->capture_default_str();
  app.fallthrough();
  app.add_option("--jobs", opt.jobs, "worker threads (default from EDGEBETTI_JOBS)")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.as_json, "JSON output, including errors");

  std::string graph_arg;
  int s = 0, t = 0, k = 2, n = 0, r = 3, p = 0, n_min = 1, n_max = 8, d = 2, i_col = 2;
  int a = 3, c = 0, tree_index = 0;
  bool all_clusters = false, long_csv = false, trees = false;
  int entry_i = -1, entry_j = -1;

  auto* betti = app.add_subcommand("betti", "Betti table of the edge ideal");
  betti->add_option("graph", graph_arg, "graph6 or family:params");
  betti->add_option("--i", entry_i, "single entry: column i (needs --j)");
  betti->add_option("--j", entry_j, "single entry: degree j");

  auto* reg = app.add_subcommand("reg", "regularity of the edge ideal");
  reg->add_option("graph", graph_arg);

  auto* cov = app.add_subcommand("cover", "(s,t)-template certificate");
  cov->add_option("graph", graph_arg);
  cov->add_option("--s", s)->required();
  cov->add_option("--t", t)->required();

  auto* chic = app.add_subcommand("chic", "coloring number and witnessing pairs");
  chic->add_option("graph", graph_arg);

  auto* residue = app.add_subcommand("residue", "residue family F(H,s,t)");
  residue->add_option("graph", graph_arg);
  residue->add_option("--s", s)->required();
  residue->add_option("--t", t)->required();

  auto* critical = app.add_subcommand("critical", "finite-horizon criticality verdict");
  critical->add_option("graph", graph_arg);
  critical->add_option("--nmax", n_max)->capture_default_str();

  auto* clusters = app.add_subcommand("clusters", "parabolic k-clusters with Dyck paths");
  clusters->add_option("--k", k)->required();

  auto* census = app.add_subcommand("census", "B/H/T census for a parabolic index");
  census->add_option("--r", r)->required();
  census->add_option("--p", p)->required();
  census->add_option("--nmin", n_min)->capture_default_str();
  census->add_option("--nmax", n_max)->capture_default_str();
  census->add_flag("--all-clusters", all_clusters, "forbid every cluster of the order");
  census->add_flag("--long", long_csv, "long-format ratio CSV");

  auto* regcensus = app.add_subcommand("regcensus", "regularity distribution over vanishing graphs");
  regcensus->add_option("--r", r)->required();
  regcensus->add_option("--p", p)->required();
  regcensus->add_option("--n", n)->required();

  auto* homog = app.add_subcommand("homogeneous", "homogeneous set sizes over vanishing graphs");
  homog->add_option("--r", r)->required();
  homog->add_option("--p", p)->required();
  homog->add_option("--n", n)->required();

  auto* contain = app.add_subcommand("containment", "(d,1)-templates containing all parabolic clusters");
  contain->add_option("--d", d)->required();
  contain->add_option("--n", n)->required();

  auto* meta = app.add_subcommand("metagraph", "connectivity of templates in the single-edge graph");
  meta->add_option("--n", n)->required();
  meta->add_option("--s", s)->required();
  meta->add_option("--t", t)->required();

  auto* matching = app.add_subcommand("matching", "greedy and maximum induced matchings");
  matching->add_option("graph", graph_arg);
  matching->add_option("--k", k, "average over graphs with beta_{k-2,k} = 0 (with --n)");
  matching->add_option("--n", n);

  auto* homology = app.add_subcommand("homology", "f-vector and reduced homology of Ind(G)");
  homology->add_option("graph", graph_arg);

  auto* gen = app.add_subcommand("gen", "unlabeled graphs (or trees) as graph6 lines");
  gen->add_option("--n", n)->required();
  gen->add_flag("--trees", trees);

  auto* construct = app.add_subcommand("construction", "complement(C_a + T) + M_c checks");
  construct->add_option("--a", a)->required();
  construct->add_option("--c", c)->capture_default_str();
  construct->add_option("--tree", graph_arg, "tree (graph6 or family:params); default empty");

  auto* rowpat = app.add_subcommand("rowpattern", "Betti row pattern of the cycle-tree-matching graph");
  rowpat->add_option("--r", r)->required();
  rowpat->add_option("--i", i_col)->required();
  rowpat->add_option("--n", n)->required();
  rowpat->add_option("--tree-index", tree_index, "index into the tree enumeration")->capture_default_str();

  auto* demo = app.add_subcommand("heawood-demo", "Betti table of complement(Heawood) against reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const eb::FieldSpec field(opt.prime);
    const int jobs = opt.jobs;

    if (betti->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        if (entry_i >= 0 || entry_j >= 0) {
          if (entry_i < 0 || entry_j < 0) throw eb::input_error("--i and --j go together");
          const auto v = eb::hochster_entry(g, entry_i, entry_j, field, jobs);
          if (opt.as_json)
            print_json({{"i", entry_i}, {"j", entry_j}, {"row", entry_j - entry_i}, {"value", v}});
          else
            std::cout << "beta_{" << entry_i << "," << entry_j << "} = " << v << "  (row " << entry_j - entry_i
                      << ")\n";
          continue;
        }
        const auto table = eb::betti_table(g, field, jobs);
        if (opt.as_json) {
          print_json(eb::to_json(table));
        } else {
          std::cout << table.grid();
          if (table.empty())
            std::cout << "note: the graph has no edges, so I_G = 0\n";
          else
            std::cout << "row r, column i holds beta_{i,i+r}\n";
        }
      }
    } else if (reg->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        const int value = eb::regularity(g, field, jobs);
        if (opt.as_json)
          print_json({{"regularity", value}});
        else
          std::cout << value << '\n';
      }
    } else if (cov->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        auto cert = eb::cover(g, s, t);
        if (opt.as_json) {
          print_json(cert ? eb::json{{"template", true}, {"certificate", eb::to_json(*cert)}}
                          : eb::json{{"template", false}});
        } else if (!cert) {
          std::cout << "none\n";
        } else {
          for (int cls = 0; cls < s + t; ++cls) {
            std::cout << (cls < s ? "clique" : "independent") << ':';
            for (int v = 0; v < g.order(); ++v)
              if (cert->assignment[v] == cls) std::cout << ' ' << v;
            std::cout << '\n';
          }
        }
      }
    } else if (chic->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        const auto cn = eb::coloring_number(g);
        if (opt.as_json)
          print_json(eb::to_json(cn));
        else
          std::cout << cn.value << "; witnessing: " << pairs_text(cn.witnessing) << '\n';
      }
    } else if (residue->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        const auto fam = eb::residue_family(g, s, t);
        if (opt.as_json) {
          print_json(eb::to_json(fam));
        } else {
          for (const auto& m : fam.members)
            std::cout << (m.order() == 0 ? "(empty graph)" : eb::to_graph6(m)) << "  n=" << m.order()
                      << " e=" << m.edge_count() << '\n';
        }
      }
    } else if (critical->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        const auto rep = eb::is_critical_desk(g, n_max, jobs);
        if (opt.as_json) {
          print_json(eb::to_json(rep));
          continue;
        }
        std::cout << "desk verdict: " << eb::to_string(rep.verdict) << " (n = " << rep.n_min << ".." << rep.n_max
                  << ", coloring number " << rep.coloring.value << ")\n";
        for (const auto& tr : rep.traces) {
          std::cout << "  (s,t) = (" << tr.s << "," << tr.t << ")  family:";
          for (const auto& f : tr.family) std::cout << ' ' << (f.order() == 0 ? "(empty)" : eb::to_graph6(f));
          std::cout << "\n    |P(n,F)|:";
          for (const auto& pt : tr.points) {
            std::cout << " n=" << pt.n << ':' << pt.count;
            if (pt.has_complete || pt.has_empty)
              std::cout << '[' << (pt.has_complete ? "K" : "") << (pt.has_empty ? "E" : "") << ']';
          }
          std::cout << '\n';
        }
      }
    } else if (clusters->parsed()) {
      const auto specs = eb::parabolic_clusters(k);
      if (opt.as_json) {
        eb::json arr = eb::json::array();
        for (const auto& spec : specs)
          arr.push_back({{"parts", eb::to_json(spec)}, {"dyck", eb::cluster_to_dyck(spec).steps()}});
        print_json({{"k", k}, {"count", specs.size()}, {"catalan", eb::catalan(k - 1)}, {"clusters", arr}});
      } else {
        for (const auto& spec : specs) std::cout << spec.to_string() << "  " << eb::cluster_to_dyck(spec).steps() << '\n';
        std::cout << specs.size() << " parabolic " << k << "-clusters (Catalan(" << k - 1 << ") = " << eb::catalan(k - 1)
                  << ")\n";
      }
    } else if (census->parsed()) {
      eb::CensusOptions copt{all_clusters, field, jobs};
      const auto rows = eb::census(r, p, n_min, n_max, copt);
      if (opt.as_json) {
        eb::json arr = eb::json::array();
        for (const auto& row : rows) arr.push_back(eb::to_json(row));
        print_json({{"schema", eb::json_schema_version}, {"rows", arr}});
      } else if (long_csv) {
        eb::write_ratio_long_csv(std::cout, rows);
      } else {
        std::cout << eb::census_csv_header() << '\n';
        for (const auto& row : rows) std::cout << eb::census_csv_line(row) << '\n';
      }
    } else if (regcensus->parsed()) {
      const auto rc = eb::regularity_census(r, p, n, field, jobs);
      if (opt.as_json) {
        eb::json hist = eb::json::object();
        for (auto [reg_value, count] : rc.histogram) hist[std::to_string(reg_value)] = count;
        print_json({{"r", r},
                    {"p", p},
                    {"n", n},
                    {"considered", rc.considered},
                    {"histogram", hist},
                    {"upper_rows_nonzero", rc.upper_rows_nonzero},
                    {"templates", rc.templates},
                    {"templates_over_bound", rc.templates_over_bound}});
      } else {
        std::cout << "graphs with vanishing beta and at least one edge: " << rc.considered << '\n';
        for (auto [reg_value, count] : rc.histogram)
          std::cout << "  reg " << reg_value << ": " << count << "  (" << rc.fraction_at(reg_value).to_string() << ")\n";
        std::cout << "parabolic entries on rows 3.." << r - 1 << " all non-zero: "
                  << rc.fraction_upper_rows_nonzero().to_string() << '\n';
        std::cout << "templates above reg " << r - 1 << ": " << rc.templates_over_bound << " of " << rc.templates << '\n';
      }
    } else if (homog->parsed()) {
      const auto hc = eb::homogeneous_census(r, p, n, field, jobs);
      if (opt.as_json)
        print_json({{"threshold", hc.threshold},
                    {"fraction", hc.fraction().to_string()},
                    {"fraction_labeled", hc.fraction_labeled().to_string()}});
      else
        std::cout << "homogeneous set >= " << hc.threshold << ": " << hc.fraction().to_string() << " of classes, "
                  << hc.fraction_labeled().to_string() << " of labeled graphs\n";
    } else if (contain->parsed()) {
      const auto cf = eb::template_cluster_containment(d, n, jobs);
      if (opt.as_json)
        print_json({{"d", d},
                    {"n", n},
                    {"fraction", cf.fraction().to_string()},
                    {"fraction_labeled", cf.fraction_labeled().to_string()}});
      else
        std::cout << cf.containing << " of " << cf.templates << " (" << d << ",1)-templates contain every parabolic "
                  << "k-cluster, k <= " << d << "; labeled: " << cf.fraction_labeled().to_string() << '\n';
    } else if (meta->parsed()) {
      const auto rep = eb::metagraph_connectivity(n, s, t, jobs);
      if (opt.as_json)
        print_json(eb::to_json(rep));
      else
        std::cout << "classes " << rep.classes << ", meta-edges " << rep.meta_edges << ", templates "
                  << rep.template_classes << ", components " << rep.template_components << ", parity bipartite "
                  << (rep.parity_bipartite ? "yes" : "no") << ", stuck " << rep.stuck_templates << '\n';
    } else if (matching->parsed()) {
      if (n > 0) {
        const auto avg = eb::matching_average(k, n, field, jobs);
        if (opt.as_json)
          print_json(eb::to_json(avg));
        else
          std::cout << "classes " << avg.classes << ", average " << avg.unlabeled_average.to_string()
                    << ", labeled average " << avg.labeled_average.to_string() << ", bound " << avg.bound.to_string()
                    << '\n';
      } else {
        for (const auto& g : input_graphs(graph_arg)) {
          const auto greedy = eb::greedy_induced_matching(g);
          const int iota = eb::max_induced_matching(g);
          if (opt.as_json) {
            print_json({{"greedy", pairs_text(greedy)}, {"greedy_size", greedy.size()}, {"iota", iota}});
          } else {
            std::cout << "greedy: " << pairs_text(greedy) << "  (" << greedy.size() << " edges)\n";
            std::cout << "iota: " << iota << '\n';
          }
        }
      }
    } else if (homology->parsed()) {
      for (const auto& g : input_graphs(graph_arg)) {
        const auto cx = eb::independence_complex(g);
        const auto h = eb::reduced_homology(cx, field);
        if (opt.as_json) {
          print_json({{"f_vector", cx.f_vector()}, {"homology", eb::to_json(h)}});
        } else {
          std::cout << "f-vector (from the empty face):";
          for (auto f : cx.f_vector()) std::cout << ' ' << f;
          std::cout << "\nreduced homology:";
          if (h.acyclic()) std::cout << " none";
          for (auto [deg, dim] : h.dims) std::cout << " H" << deg << '=' << dim;
          std::cout << '\n';
        }
      }
    } else if (gen->parsed()) {
      const auto graphs = trees ? eb::enumerate_trees(n) : eb::unlabeled_graphs(n, jobs);
      eb::write_graph6_lines(std::cout, graphs);
    } else if (construct->parsed()) {
      const eb::Graph tree = graph_arg.empty() ? eb::Graph(0) : parse_graph(graph_arg);
      const auto chk = eb::check_special_construction(a, tree, c, field);
      if (opt.as_json) {
        print_json({{"a", a},
                    {"b", chk.b},
                    {"c", c},
                    {"part1", chk.part1},
                    {"part2", chk.part2},
                    {"part3", chk.part3},
                    {"orders_missing_part1", chk.orders_missing_part1}});
      } else {
        std::cout << "graph: " << eb::to_graph6(eb::section6_graph(a, tree, c)) << '\n';
        std::cout << "(1) witness of H" << c + 1 << " = 1 for every m in [" << a + 2 * c << "," << a + chk.b + 2 * c
                  << "]: " << (chk.part1 ? "yes" : "no") << '\n';
        std::cout << "(2) H" << c + 1 << " = 0 below " << a + 2 * c << " vertices: " << (chk.part2 ? "yes" : "no") << '\n';
        std::cout << "(3) nothing above degree " << c + 1 << ": " << (chk.part3 ? "yes" : "no") << '\n';
      }
    } else if (rowpat->parsed()) {
      const auto shape = eb::row_pattern_shape(r, i_col, n);
      const eb::Graph tree = shape.b == 0 ? eb::Graph(0) : [&] {
        const auto all = eb::enumerate_trees(shape.b);
        if (tree_index < 0 || tree_index >= static_cast<int>(all.size()))
          throw eb::input_error("tree index out of range (there are " + std::to_string(all.size()) + " trees)");
        return all[static_cast<std::size_t>(tree_index)];
      }();
      const auto chk = eb::check_row_pattern(r, i_col, n, tree, field, jobs);
      if (opt.as_json) {
        print_json({{"table", eb::to_json(chk.table)},
                    {"conclusion1", chk.conclusion1},
                    {"conclusion2", chk.conclusion2},
                    {"rows_above_zero", chk.rows_above_zero},
                    {"rows_below_zero", chk.rows_below_zero}});
      } else {
        std::cout << chk.table.grid();
        std::cout << "row " << r << " non-zero for " << i_col << " < j <= " << n - r << ": "
                  << (chk.conclusion1 ? "yes" : "no") << '\n';
        std::cout << "row " << r << " zero for j <= " << i_col << ": " << (chk.conclusion2 ? "yes" : "no") << '\n';
        std::cout << "rows beyond " << r << " zero: " << (chk.rows_above_zero ? "yes" : "no") << '\n';
        std::cout << "rows before " << r << " zero: " << (chk.rows_below_zero ? "yes" : "no") << '\n';
      }
    } else if (demo->parsed()) {
      const auto table = eb::betti_table(eb::complement(eb::heawood_graph()), field, jobs);
      bool match = table.at(2, 5) == 0;
      auto compare = [&](int row, const std::vector<std::uint64_t>& expected) {
        const auto got = table.row(row);
        std::vector<std::uint64_t> values;
        for (auto [col, v] : got) values.push_back(v);
        const bool ok = values == expected;
        match &= ok;
        std::cout << "row " << row << ": " << (ok ? "matches" : "differs") << " reference values\n";
      };
      std::cout << table.grid();
      compare(2, heawood_row2);
      compare(3, heawood_row3);
      std::cout << "beta_{2,5} = " << table.at(2, 5) << '\n';
      return match ? 0 : 1;
    }
  } catch (const eb::capacity_error& e) {
    if (opt.as_json) print_json({{"error", "capacity"}, {"message", e.what()}});
    std::cerr << "capacity: " << e.what() << '\n';
    return 1;
  } catch (const eb::input_error& e) {
    if (opt.as_json) print_json({{"error", "usage"}, {"message", e.what()}});
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const eb::undefined_regularity_error& e) {
    if (opt.as_json) print_json({{"error", "undefined"}, {"message", e.what()}});
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    if (opt.as_json) print_json({{"error", "internal"}, {"message", e.what()}});
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
