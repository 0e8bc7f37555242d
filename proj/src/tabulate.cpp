#include "tcknot/tabulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "tcknot/errors.hpp"
#include "tcknot/invariants.hpp"
#include "tcknot/spd.hpp"

namespace tcknot {

namespace {

constexpr std::string_view kHeader = "name,c2,alternating,jones,alexander";

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  std::string out(s.substr(a, b - a));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

void check_alexander(const std::string& name, const Laurent& a) {
  if (a.is_zero() || a.min_exponent() != -a.max_exponent())
    throw ValidationError("symmetry", "Alexander polynomial of " + name + " is not symmetric");
  for (auto [e, c] : a.terms())
    if (a.coeff(-e) != c) throw ValidationError("symmetry", "Alexander polynomial of " + name + " is not symmetric");
  if (a.eval_at_one() != 1) throw ValidationError("symmetry", "Alexander polynomial of " + name + " has Delta(1) != 1");
}

std::string display_name(const KnotClass& k) { return k.name ? *k.name : std::string(); }

std::string labelled(const std::string& label, const KnotClass& k) {
  return k.name ? label + "(" + *k.name + ")" : label;
}

std::string csv_optional(const std::optional<Laurent2>& p, char var) { return p ? p->to_string(var) : std::string(); }

std::string latex_name(const std::string& name) {
  // 3_1 -> $3_{1}$, 11n_38 -> $11n_{38}$
  const auto u = name.find('_');
  if (u == std::string::npos) return name;
  return "$" + name.substr(0, u) + "_{" + name.substr(u + 1) + "}$";
}

// 2t^{-1} - 3 + 2t
std::string latex_poly(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const Coeff mag = c < 0 ? -c : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || e == 0) out << mag;
    if (e == 1) out << "t";
    else if (e != 0) out << "t^{" << e << "}";
  }
  return out.str();
}

}  // namespace

// ---- reference table -------------------------------------------------------

std::vector<ReferenceKnot> parse_reference(std::string_view csv) {
  std::vector<ReferenceKnot> out;
  std::set<std::string> names;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (!header) {
      if (trim(line) != kHeader) throw ParseError("reference table header must be '" + std::string(kHeader) + "'");
      header = true;
      continue;
    }
    const auto f = split_csv(line);
    const std::string where = "reference line " + std::to_string(line_no);
    if (f.size() != 5) throw ParseError(where + ": expected 5 fields");
    ReferenceKnot r;
    r.name = f[0];
    if (r.name.empty()) throw ParseError(where + ": empty name");
    try {
      std::size_t used = 0;
      r.c2 = std::stoi(f[1], &used);
      if (used != f[1].size() || r.c2 < 0) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError(where + ": bad crossing number '" + f[1] + "'");
    }
    if (f[2] == "true") r.alternating = true;
    else if (f[2] == "false") r.alternating = false;
    else throw ParseError(where + ": alternating must be true or false");
    r.jones = HalfLaurent::parse(f[3]).mirror_folded();
    r.alexander = Laurent::parse(f[4]);
    check_alexander(r.name, r.alexander);
    if (!names.insert(r.name).second) throw ValidationError("duplicate", "duplicate reference knot " + r.name);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ReferenceKnot> load_reference(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open reference table " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_reference(buf.str());
}

std::string reference_to_csv(const std::vector<ReferenceKnot>& refs) {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& r : refs)
    out += r.name + "," + std::to_string(r.c2) + "," + (r.alternating ? "true" : "false") + "," +
           r.jones.to_string() + "," + r.alexander.to_string() + "\n";
  return out;
}

ReferenceKnot reference_from_pd(const std::string& name, int c2, bool alternating, std::string_view pd) {
  const DoubleDiagram dd = parse_pd(pd);
  if (component_count(dd) != 1) throw ValidationError("not-a-knot", name + " has more than one component");
  if (euler_characteristic(dd) != 2) throw ValidationError("non-spherical", name + " is not a planar diagram");
  const Orientation o = traversal_orientation(dd);
  ReferenceKnot r;
  r.name = name;
  r.c2 = c2;
  r.alternating = alternating;
  r.jones = bracket_jones(dd, o).mirror_folded();
  r.alexander = alexander(dd, o);
  check_alexander(name, r.alexander);
  return r;
}

// ---- naming ------------------------------------------------------------------

Identification identify(const KnotClass& k, const std::vector<ReferenceKnot>& refs) {
  Identification id;
  const HalfLaurent v = k.jones.mirror_folded();
  for (const auto& r : refs)
    if (r.jones == v && r.alexander == k.alexander) id.candidates.push_back(r.name);
  std::sort(id.candidates.begin(), id.candidates.end());
  if (id.candidates.size() == 1) id.name = id.candidates.front();
  return id;
}

void name_classes(std::vector<KnotClass>& classes, const std::vector<ReferenceKnot>& refs) {
  for (auto& k : classes)
    if (!k.composite) k.name = identify(k, refs).name;
}

std::vector<std::string> class_labels(const std::vector<KnotClass>& classes) {
  std::vector<std::string> out;
  std::map<int, int> next;
  for (const auto& k : classes)
    out.push_back(k.composite ? std::string() : "t" + std::to_string(k.c3) + "_" + std::to_string(++next[k.c3]));
  return out;
}

// ---- conjecture ----------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ApplicableHolds: return "applicable-holds";
    case Verdict::ApplicableViolated: return "applicable-violated";
    case Verdict::NotApplicableMonic: return "not-applicable(monic)";
  }
  return "";
}

ConjectureReport conjecture_report(const std::vector<KnotClass>& classes, const std::vector<ReferenceKnot>& refs) {
  ConjectureReport rep;
  const auto labels = class_labels(classes);
  std::map<std::string, const ReferenceKnot*> by_name;
  for (const auto& r : refs) by_name[r.name] = &r;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const KnotClass& k = classes[i];
    if (k.composite) continue;
    ConjectureRow row;
    row.label = labels[i];
    row.name = k.name ? k.name : identify(k, refs).name;
    row.c3 = k.c3;
    row.breadth = breadth(k.alexander);
    row.monic = is_monic(k.alexander);
    row.weak_holds = row.c3 >= row.breadth;
    if (row.monic) {
      row.verdict = Verdict::NotApplicableMonic;
      ++rep.not_applicable;
    } else if (row.c3 > row.breadth) {
      row.verdict = Verdict::ApplicableHolds;
      ++rep.holds;
    } else {
      row.verdict = Verdict::ApplicableViolated;
      ++rep.violated;
    }
    if (!row.weak_holds) ++rep.weak_violations;
    if (row.name) {
      if (auto it = by_name.find(*row.name); it != by_name.end()) {
        const ReferenceKnot& r = *it->second;
        row.c2 = r.c2;
        row.alternating = r.alternating;
        row.third_bound = 3 * row.c3 >= r.c2;
        if (r.alternating) row.alternating_bound = 2 * row.c3 >= r.c2;
        if (!*row.third_bound || (row.alternating_bound && !*row.alternating_bound)) ++rep.bound_violations;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

nlohmann::ordered_json ConjectureReport::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  j["holds"] = holds;
  j["violated"] = violated;
  j["not_applicable"] = not_applicable;
  j["weak_violations"] = weak_violations;
  j["bound_violations"] = bound_violations;
  json arr = json::array();
  for (const auto& r : rows) {
    json x;
    x["label"] = r.label;
    x["name"] = r.name ? json(*r.name) : json(nullptr);
    x["c3"] = r.c3;
    x["breadth"] = r.breadth;
    x["monic"] = r.monic;
    x["verdict"] = to_string(r.verdict);
    x["weak_bound"] = r.weak_holds;
    x["c2"] = r.c2 ? json(*r.c2) : json(nullptr);
    x["alternating"] = r.alternating ? json(*r.alternating) : json(nullptr);
    x["third_bound"] = r.third_bound ? json(*r.third_bound) : json(nullptr);
    x["alternating_bound"] = r.alternating_bound ? json(*r.alternating_bound) : json(nullptr);
    arr.push_back(std::move(x));
  }
  j["rows"] = std::move(arr);
  return j;
}

// ---- tables ----------------------------------------------------------------------

TableFormat table_format_from_string(std::string_view s) {
  if (s == "json") return TableFormat::Json;
  if (s == "csv") return TableFormat::Csv;
  if (s == "latex") return TableFormat::Latex;
  throw Error("unknown format '" + std::string(s) + "' (json, csv, latex)");
}

std::string emit_table(const std::vector<KnotClass>& classes, TableFormat format) {
  const auto labels = class_labels(classes);
  std::ostringstream out;
  switch (format) {
    case TableFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].composite) continue;
        nlohmann::ordered_json j;
        j["label"] = labelled(labels[i], classes[i]);
        const nlohmann::ordered_json record = class_record(classes[i]);
        for (const auto& [key, value] : record.items())
          if (key != "type") j[key] = value;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case TableFormat::Csv:
      out << "label,name,c3,jones,alexander,homfly,kauffman,breadth,monic,diagram_count,ambiguous,witness\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const KnotClass& k = classes[i];
        if (k.composite) continue;
        // sPD witnesses contain commas, so that field is quoted.
        out << labels[i] << "," << display_name(k) << "," << k.c3 << "," << k.jones.to_string() << ","
            << k.alexander.to_string() << "," << csv_optional(k.homfly, 'v') << "," << csv_optional(k.kauffman, 'a')
            << "," << breadth(k.alexander) << "," << (is_monic(k.alexander) ? "true" : "false") << ","
            << k.diagram_count << "," << (k.ambiguous ? "true" : "false") << ",\"" << serialize_spd(k.witness)
            << "\"\n";
      }
      break;
    case TableFormat::Latex:
      out << "\\begin{tabular}{llrlr}\n";
      out << "label & knot & $c_3$ & $\\Delta(t)$ & breadth\\\\\n\\hline\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const KnotClass& k = classes[i];
        if (k.composite) continue;
        const std::string& l = labels[i];
        const auto u = l.find('_');
        out << "$" << l.substr(0, u) << "_{" << l.substr(u + 1) << "}$ & " << (k.name ? latex_name(*k.name) : "")
            << " & " << k.c3 << " & $" << latex_poly(k.alexander) << "$ & " << breadth(k.alexander) << "\\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
  }
  return out.str();
}

std::string emit_counts(const std::vector<CountRow>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"projections", r.projections}, {"knots", r.knots}});
      out << arr.dump(2) << "\n";
      break;
    }
    case TableFormat::Csv:
      out << "n,projections,knots\n";
      for (const auto& r : rows) out << r.n << "," << r.projections << "," << r.knots << "\n";
      break;
    case TableFormat::Latex:
      out << "\\begin{tabular}{r||c|c}\ncrossings & number of projections & number of knots\\\\\n\\hline\\hline\n";
      for (const auto& r : rows) out << "$" << r.n << "$ & $" << r.projections << "$ & $" << r.knots << "$\\\\\n";
      out << "\\end{tabular}\n";
      break;
  }
  return out.str();
}

// ---- TikZ ------------------------------------------------------------------------

std::string emit_tikz(const TripleDiagram& d) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "\\begin{tikzpicture}\n";
  if (d.is_unknot_stub()) {
    out << "  \\draw (0,0) circle (1);\n\\end{tikzpicture}\n";
    return out.str();
  }
  using TP = TripleProjection;
  const TP& p = d.projection();
  const int n = p.crossing_count();
  const auto face_list = faces(p);
  std::vector<int> face_of(static_cast<std::size_t>(p.dart_count()));
  for (std::size_t f = 0; f < face_list.size(); ++f)
    for (Dart x : face_list[f]) face_of[static_cast<std::size_t>(x)] = static_cast<int>(f);
  std::vector<int> edge_of(static_cast<std::size_t>(p.dart_count()), -1);
  int edges = 0;
  for (Dart x = 0; x < p.dart_count(); ++x)
    if (edge_of[static_cast<std::size_t>(x)] < 0) edge_of[static_cast<std::size_t>(x)] = edge_of[static_cast<std::size_t>(p.twin(x))] = edges++;

  // Nodes: crossings, edge midpoints, face centres.
  const int faces_n = static_cast<int>(face_list.size());
  const auto edge_node = [n](int e) { return n + e; };
  const auto face_node = [n, edges](int f) { return n + edges + f; };
  const int total = n + edges + faces_n;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  const auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (Dart x = 0; x < p.dart_count(); ++x) {
    link(TP::crossing_of(x), edge_node(edge_of[static_cast<std::size_t>(x)]));
    link(edge_node(edge_of[static_cast<std::size_t>(x)]), face_node(face_of[static_cast<std::size_t>(x)]));
    link(TP::crossing_of(x), face_node(face_of[static_cast<std::size_t>(x)]));
  }
  int outer = 0;
  for (int f = 1; f < faces_n; ++f)
    if (face_list[static_cast<std::size_t>(f)].size() > face_list[static_cast<std::size_t>(outer)].size()) outer = f;

  std::vector<double> x(static_cast<std::size_t>(total), 0), y(static_cast<std::size_t>(total), 0);
  std::vector<char> fixed(static_cast<std::size_t>(total), 0);
  fixed[static_cast<std::size_t>(face_node(outer))] = 1;  // at infinity, never used
  std::vector<int> ring;
  for (Dart dart : face_list[static_cast<std::size_t>(outer)]) {
    ring.push_back(TP::crossing_of(dart));
    ring.push_back(edge_node(edge_of[static_cast<std::size_t>(dart)]));
  }
  std::vector<int> placed;
  for (int v : ring)
    if (!fixed[static_cast<std::size_t>(v)]) {
      fixed[static_cast<std::size_t>(v)] = 1;
      placed.push_back(v);
    }
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const double a = 2 * pi * static_cast<double>(i) / static_cast<double>(placed.size());
    x[static_cast<std::size_t>(placed[i])] = 2 * std::cos(a);
    y[static_cast<std::size_t>(placed[i])] = 2 * std::sin(a);
  }
  const int outer_node = face_node(outer);
  for (int it = 0; it < 4000; ++it)
    for (int v = 0; v < total; ++v) {
      if (fixed[static_cast<std::size_t>(v)]) continue;
      double sx = 0, sy = 0;
      int k = 0;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == outer_node) continue;
        sx += x[static_cast<std::size_t>(w)];
        sy += y[static_cast<std::size_t>(w)];
        ++k;
      }
      if (k) {
        x[static_cast<std::size_t>(v)] = sx / k;
        y[static_cast<std::size_t>(v)] = sy / k;
      }
    }

  const auto point = [](double px, double py) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << "(" << px << "," << py << ")";
    return s.str();
  };
  // Port of a dart: pulled from its crossing toward the edge midpoint and
  // the two faces beside it.
  const auto port = [&](Dart dart) {
    const int c = TP::crossing_of(dart);
    const int m = edge_node(edge_of[static_cast<std::size_t>(dart)]);
    double fx = 0, fy = 0;
    for (int f : {face_of[static_cast<std::size_t>(dart)], face_of[static_cast<std::size_t>(TP::ccw(dart))]}) {
      const int v = f == outer ? m : face_node(f);
      fx += x[static_cast<std::size_t>(v)] / 2;
      fy += y[static_cast<std::size_t>(v)] / 2;
    }
    return std::pair{0.55 * x[static_cast<std::size_t>(c)] + 0.25 * x[static_cast<std::size_t>(m)] + 0.2 * fx,
                     0.55 * y[static_cast<std::size_t>(c)] + 0.25 * y[static_cast<std::size_t>(m)] + 0.2 * fy};
  };
  const auto colour = [&](Dart dart) -> std::string {
    if (p.is_loop(dart)) return "black";
    const Level l = d.height(TP::crossing_of(dart)).strand[static_cast<std::size_t>(TP::slot_of(dart) % 3)];
    return l == Level::Bottom ? "green" : l == Level::Top ? "red" : "black";
  };
  for (Dart dart = 0; dart < p.dart_count(); ++dart) {
    // Each half edge from its crossing to the edge midpoint.
    const int c = TP::crossing_of(dart);
    const int m = edge_node(edge_of[static_cast<std::size_t>(dart)]);
    const auto [px, py] = port(dart);
    out << "  \\draw[" << colour(dart) << "] plot[smooth] coordinates {"
        << point(x[static_cast<std::size_t>(c)], y[static_cast<std::size_t>(c)]) << " " << point(px, py) << " "
        << point(x[static_cast<std::size_t>(m)], y[static_cast<std::size_t>(m)]) << "};\n";
  }
  for (int c = 0; c < n; ++c)
    out << "  % crossing " << c << " " << d.height(c).letters()[0] << d.height(c).letters()[1]
        << d.height(c).letters()[2] << "\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace tcknot
