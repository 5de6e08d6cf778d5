#include "mag/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mag/digraph.hpp"
#include "mag/distance.hpp"
#include "mag/io.hpp"
#include "mag/subdet.hpp"
#include "mag/traversal.hpp"

namespace mag {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kData = 3;
constexpr int kBudget = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mag load(const std::string& path, std::ostream& err) {
  Mag m = parse_mag_file(path);
  if (m.duplicates_dropped() > 0) {
    err << "note: " << m.duplicates_dropped() << " duplicate edge(s) dropped\n";
  }
  return m;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

CompositeVertex parse_vertex_spec(const Mag& m, const std::string& spec) {
  const auto tokens = split_commas(spec);
  if (tokens.size() != m.order()) {
    throw UsageError("composite vertex \"" + spec + "\" needs " +
                     std::to_string(m.order()) + " comma-separated elements");
  }
  CompositeVertex v;
  v.coords.reserve(tokens.size());
  for (std::size_t n = 0; n < tokens.size(); ++n) {
    const auto idx = m.aspects().find(n, tokens[n]);
    if (!idx) {
      throw UsageError("unknown element \"" + tokens[n] + "\" for aspect \"" +
                       m.aspects().name(n) + "\"");
    }
    v.coords.push_back(*idx);
  }
  return v;
}

SubDetermination parse_keep(const std::string& csv, std::size_t order) {
  std::vector<AspectIndex> kept;
  for (const std::string& tok : split_commas(csv)) {
    std::size_t pos = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), pos);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || pos < 1 || pos > order) {
      throw UsageError("--keep positions are 1.." + std::to_string(order) + ", got \"" +
                       tok + "\"");
    }
    kept.push_back(pos - 1);
  }
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw UsageError("--keep lists an aspect position twice");
  }
  try {
    return SubDetermination::from_kept(kept, order);
  } catch (const MagError& e) {
    throw UsageError(e.what());
  }
}

WeakEndpoint parse_weak_spec(const Mag& m, const SubDetermination& zeta,
                             const std::string& spec) {
  const auto tokens = split_commas(spec);
  if (tokens.size() != m.order()) {
    throw UsageError("endpoint \"" + spec + "\" needs " + std::to_string(m.order()) +
                     " comma-separated tokens");
  }
  bool any_star = false;
  for (const std::string& t : tokens) any_star = any_star || t == "*";
  if (!any_star) return WeakEndpoint::exact(parse_vertex_spec(m, spec));

  CompositeVertex sub;
  for (std::size_t n = 0; n < tokens.size(); ++n) {
    if (zeta.keeps(n)) {
      if (tokens[n] == "*") {
        throw UsageError("position " + std::to_string(n + 1) +
                         " is kept by --keep and needs an element label");
      }
      const auto idx = m.aspects().find(n, tokens[n]);
      if (!idx) {
        throw UsageError("unknown element \"" + tokens[n] + "\" for aspect \"" +
                         m.aspects().name(n) + "\"");
      }
      sub.coords.push_back(*idx);
    } else if (tokens[n] != "*") {
      throw UsageError("position " + std::to_string(n + 1) +
                       " is dropped by --keep; use \"*\"");
    }
  }
  return WeakEndpoint::any_of(std::move(sub));
}

Direction parse_dir(const std::string& s) {
  if (s == "in") return Direction::in;
  if (s == "out") return Direction::out;
  throw UsageError("--dir must be \"in\" or \"out\"");
}

std::string format_path(const Mag& m, const Walk& w) {
  std::string s = "path:";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    s += i == 0 ? " " : " -> ";
    s += m.aspects().format_vertex(w.vertices[i]);
  }
  return s;
}

void write_graph(const Mag& m, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    serialize_mag(m, out);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw IoError("cannot open \"" + out_path + "\" for writing");
  serialize_mag(m, f);
}

void report_subdet(const SubMagResult& r, std::ostream& err) {
  if (r.dropped_self_loops > 0) {
    err << "note: " << r.dropped_self_loops << " edge(s) collapsed to self-loops and were dropped\n";
  }
  if (r.merged_edges > 0) {
    err << "note: " << r.merged_edges << " duplicate projected edge(s) merged\n";
  }
}

void print_metric_report(const DistanceReport& r, std::ostream& out) {
  out << "# classification: " << to_string(r.classification) << '\n';
  out << "# axiom 2 violations: " << r.axiom2_violations << '\n';
  out << "# axiom 3 violations: " << r.axiom3_violations << '\n';
  out << "# axiom 4 violations: " << r.axiom4_violations << '\n';
  for (const AxiomViolation& v : r.violations) {
    out << "# axiom " << v.axiom << " witness: " << r.row_labels[v.x] << ' '
        << r.row_labels[v.y];
    if (v.axiom == 4) out << ' ' << r.row_labels[v.z];
    out << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multiaspect graph toolkit"};
  app.require_subcommand(1);

  std::string info_file;
  CLI::App* info = app.add_subcommand("info", "order, aspect sizes, vertex and edge counts");
  info->add_option("file", info_file, "graph file")->required();

  std::string deg_file, deg_element, deg_composite, deg_dir;
  int deg_aspect = 0;
  CLI::App* degree = app.add_subcommand("degree", "aspect-element or composite-vertex degree");
  degree->add_option("file", deg_file)->required();
  degree->add_option("--aspect", deg_aspect, "aspect position, 1-based");
  degree->add_option("--element", deg_element, "element label");
  degree->add_option("--composite", deg_composite, "comma-separated composite vertex");
  degree->add_option("--dir", deg_dir, "in or out")->required();

  std::string sub_file, sub_keep, sub_out;
  CLI::App* subdet = app.add_subcommand("subdet", "project onto a sublist of aspects");
  subdet->add_option("file", sub_file)->required();
  subdet->add_option("--keep", sub_keep, "kept aspect positions, e.g. 1,3")->required();
  subdet->add_option("-o,--output", sub_out, "output file (default: stdout)");

  std::string agg_file, agg_out;
  CLI::App* agg = app.add_subcommand("aggregate", "project onto the first aspect");
  agg->add_option("file", agg_file)->required();
  agg->add_option("-o,--output", agg_out, "output file (default: stdout)");

  std::string dist_file, dist_from, dist_to;
  bool dist_show_path = false;
  CLI::App* dist = app.add_subcommand("dist", "shortest-path length between composite vertices");
  dist->add_option("file", dist_file)->required();
  dist->add_option("--from", dist_from, "comma-separated composite vertex")->required();
  dist->add_option("--to", dist_to, "comma-separated composite vertex")->required();
  dist->add_flag("--show-path", dist_show_path, "also print one shortest path");

  std::string wd_file, wd_keep, wd_from, wd_to;
  bool wd_show_path = false;
  CLI::App* weak = app.add_subcommand(
      "weak-dist", "shortest-path length with sub-determined endpoint(s)");
  weak->add_option("file", wd_file)->required();
  weak->add_option("--keep", wd_keep, "kept aspect positions")->required();
  weak->add_option("--from", wd_from, "endpoint; \"*\" in dropped positions")->required();
  weak->add_option("--to", wd_to, "endpoint; \"*\" in dropped positions")->required();
  weak->add_flag("--show-path", wd_show_path, "also print one witness path");

  std::string girth_file;
  CLI::App* girth_cmd = app.add_subcommand("girth", "length of the shortest cycle");
  girth_cmd->add_option("file", girth_file)->required();

  std::string mx_file, mx_keep, mx_side = "both";
  bool mx_check = false, mx_full = false;
  std::size_t mx_max = 2048, mx_max_classify = 512;
  CLI::App* matrix = app.add_subcommand("matrix", "all-pairs distance matrix as TSV");
  matrix->add_option("file", mx_file)->required();
  matrix->add_option("--weak", mx_keep, "kept aspect positions for weak distances");
  matrix->add_option("--side", mx_side, "origin, destination or both (default both)");
  matrix->add_flag("--check-metric", mx_check, "classify against the distance axioms");
  matrix->add_flag("--full", mx_full, "include vertices with no incident edges");
  matrix->add_option("--max-size", mx_max, "row/column cap (default 2048)");
  matrix->add_option("--max-classify", mx_max_classify,
                     "cap for the cubic axiom scan (default 512)");

  std::string ex_file, ex_format;
  CLI::App* exp = app.add_subcommand("export", "composite-vertices digraph as DOT or edgelist");
  exp->add_option("file", ex_file)->required();
  exp->add_option("--format", ex_format, "dot or edgelist")->required();

  std::string iso_a, iso_b;
  std::uint64_t iso_budget = 1'000'000;
  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();
  iso->add_option("--budget", iso_budget, "candidate mapping budget (default 1000000)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mag");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(info)) {
      const Mag m = load(info_file, err);
      out << "order " << m.order() << "; aspects: ";
      for (std::size_t n = 0; n < m.order(); ++n) {
        if (n) out << ',';
        out << m.aspects().size(n);
      }
      out << "; composite vertices: " << m.composite_vertex_count()
          << "; edges: " << m.edge_count() << '\n';
      return kOk;
    }

    if (app.got_subcommand(degree)) {
      const Mag m = load(deg_file, err);
      const Direction dir = parse_dir(deg_dir);
      const bool by_aspect = degree->count("--aspect") || degree->count("--element");
      const bool by_composite = degree->count("--composite") != 0;
      if (by_aspect == by_composite) {
        throw UsageError("use either --aspect N --element X or --composite SPEC");
      }
      std::size_t value = 0;
      if (by_composite) {
        value = m.composite_degree(parse_vertex_spec(m, deg_composite), dir);
      } else {
        if (!degree->count("--aspect") || !degree->count("--element")) {
          throw UsageError("--aspect and --element go together");
        }
        if (deg_aspect < 1 || static_cast<std::size_t>(deg_aspect) > m.order()) {
          throw UsageError("--aspect positions are 1.." + std::to_string(m.order()));
        }
        const AspectIndex n = static_cast<AspectIndex>(deg_aspect - 1);
        const auto idx = m.aspects().find(n, deg_element);
        if (!idx) {
          throw UsageError("unknown element \"" + deg_element + "\" for aspect \"" +
                           m.aspects().name(n) + "\"");
        }
        value = m.aspect_degree(n, *idx, dir);
      }
      out << value << '\n';
      return kOk;
    }

    if (app.got_subcommand(subdet)) {
      const Mag m = load(sub_file, err);
      const SubDetermination zeta = parse_keep(sub_keep, m.order());
      const SubMagResult r = sub_mag(m, zeta);
      report_subdet(r, err);
      write_graph(r.mag, sub_out, out);
      return kOk;
    }

    if (app.got_subcommand(agg)) {
      const Mag m = load(agg_file, err);
      if (m.order() < 2) {
        throw UsageError("aggregation needs order >= 2; this graph is already a digraph");
      }
      const SubMagResult r = aggregate(m);
      report_subdet(r, err);
      write_graph(r.mag, agg_out, out);
      return kOk;
    }

    if (app.got_subcommand(dist)) {
      const Mag m = load(dist_file, err);
      const auto w = shortest_path(m, parse_vertex_spec(m, dist_from),
                                   parse_vertex_spec(m, dist_to));
      if (!w) {
        out << "inf\n";
        return kNegative;
      }
      out << w->length() << '\n';
      if (dist_show_path) out << format_path(m, *w) << '\n';
      return kOk;
    }

    if (app.got_subcommand(weak)) {
      const Mag m = load(wd_file, err);
      const SubDetermination zeta = parse_keep(wd_keep, m.order());
      const WeakEndpoint from = parse_weak_spec(m, zeta, wd_from);
      const WeakEndpoint to = parse_weak_spec(m, zeta, wd_to);
      if (!from.subdetermined && !to.subdetermined) {
        throw UsageError("at least one endpoint needs \"*\" positions; use dist otherwise");
      }
      const auto w = weak_shortest_path(m, zeta, from, to);
      if (!w) {
        out << "inf\n";
        return kNegative;
      }
      out << w->length() << '\n';
      if (wd_show_path) out << format_path(m, *w) << '\n';
      return kOk;
    }

    if (app.got_subcommand(girth_cmd)) {
      const Mag m = load(girth_file, err);
      const auto g = girth(m);
      if (!g) {
        out << "inf\n";
        return kNegative;
      }
      out << *g << '\n';
      return kOk;
    }

    if (app.got_subcommand(matrix)) {
      const Mag m = load(mx_file, err);
      DistanceOptions opt;
      opt.max_index = mx_max;
      opt.max_classify = mx_max_classify;
      opt.include_isolated = mx_full;
      opt.classify = mx_check;
      DistanceReport r;
      if (matrix->count("--weak")) {
        WeakSide side;
        if (mx_side == "origin") {
          side = WeakSide::origin;
        } else if (mx_side == "destination") {
          side = WeakSide::destination;
        } else if (mx_side == "both") {
          side = WeakSide::both;
        } else {
          throw UsageError("--side must be origin, destination or both");
        }
        r = weak_distance_matrix(m, parse_keep(mx_keep, m.order()), side, opt);
      } else {
        r = distance_matrix(m, opt);
      }
      write_distance_tsv(r, out);
      if (mx_check) print_metric_report(r, out);
      return kOk;
    }

    if (app.got_subcommand(exp)) {
      const Mag m = load(ex_file, err);
      ExportFormat fmt;
      if (ex_format == "dot") {
        fmt = ExportFormat::dot;
      } else if (ex_format == "edgelist") {
        fmt = ExportFormat::edgelist;
      } else {
        throw UsageError("--format must be dot or edgelist");
      }
      export_digraph(m, fmt, out);
      return kOk;
    }

    if (app.got_subcommand(iso)) {
      const Mag h = load(iso_a, err);
      const Mag k = load(iso_b, err);
      const IsoResult r = mags_isomorphic(h, k, IsoOptions{iso_budget});
      if (r.status == IsoStatus::budget_exceeded) {
        err << "budget exceeded after " << r.candidates_tested << " candidates\n";
        return kBudget;
      }
      if (r.status == IsoStatus::not_isomorphic) {
        out << "not isomorphic\n";
        return kNegative;
      }
      out << "isomorphic\n";
      for (std::size_t n = 0; n < r.witness->maps.size(); ++n) {
        out << "aspect " << n + 1 << ':';
        for (std::size_t i = 0; i < r.witness->maps[n].size(); ++i) {
          out << ' ' << h.aspects().label(n, static_cast<ElemIndex>(i)) << "->"
              << k.aspects().label(n, r.witness->maps[n][i]);
        }
        out << '\n';
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MagError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}

}  // namespace mag
