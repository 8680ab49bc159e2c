#include "cli.hpp"

#include "fullgroup/catalog.hpp"
#include "fullgroup/constructions.hpp"
#include "fullgroup/error.hpp"
#include "fullgroup/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <limits>
#include <future>
#include <iostream>
#include <sstream>

namespace fullgroup::cli {

namespace {

struct Options {
  std::string format = "text";
  std::size_t step_budget = kDefaultStepBudget;
  long long orbit_bound = kDefaultOrbitBound;
};

/// Line-oriented text plus the same content as a JSON object.
class Report {
 public:
  void add(const std::string& key, const std::string& text, Json value) {
    lines_.push_back(key + ": " + text);
    json_[key] = std::move(value);
  }
  void add(const std::string& key, const std::string& text) { add(key, text, text); }
  void line(const std::string& text) { lines_.push_back(text); }
  Json& json() { return json_; }

  void print(std::ostream& out, const Options& opt) const {
    if (opt.format == "json") {
      out << json_.dump(2) << '\n';
      return;
    }
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  std::vector<std::string> lines_;
  Json json_ = Json::object();
};

Json int_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

std::string int_text(const Int& x) { return x.str(); }

std::string set_text(const ClopenSet& s) {
  if (s == ClopenSet::whole(s.graph_ptr())) return "X";
  std::string out = "{";
  for (std::size_t i = 0; i < s.words().size(); ++i) {
    if (i) out += ", ";
    out += format_word(s.graph(), s.words()[i]);
  }
  return out + "}";
}

std::string point_text(const Graph& g, const Point& x) {
  std::string pre = x.preperiod.empty() ? "" : format_word(g, x.preperiod);
  return pre + "(" + format_word(g, x.cycle) + ")^inf";
}

void add_table(Report& r, const PrefixBijection& t, const std::string& key = "pieces") {
  r.add(key, std::to_string(t.pieces().size()), table_to_json(t));
  for (const auto& p : t.pieces())
    r.line("  " + format_word(t.graph(), p.range) + " <- " + format_word(t.graph(), p.domain));
}

void add_element(Report& r, const FullGroupElement& a, const std::string& graph_ref) {
  r.add("ambient", set_text(a.ambient()), clopen_to_json(a.ambient()));
  r.json()["graph"] = graph_ref;
  add_table(r, a.table());
}

std::string index_text(const IntVector& coords) {
  return is_zero(coords) ? "0" : to_string(coords);
}

std::string group_coordinates_text(const FgAbelianGroup& g, const IntVector& c) {
  return to_string(free_first(g, c));
}

// --- commands --------------------------------------------------------------

void cmd_invariants(Report& r, const GraphPtr& g) {
  const Homology h = homology(*g);
  const PeriodInfo p = period_and_primitivity(*g);
  r.add("H0", h.h0.to_string());
  r.add("H1 rank", std::to_string(h.h1_rank()), h.h1_rank());
  Json basis = Json::array();
  std::string basis_text;
  for (std::size_t c = 0; c < h.h1_rank(); ++c) {
    basis.push_back(vector_json(h.h1_basis.column(c)));
    basis_text += (c ? " " : "") + to_string(h.h1_basis.column(c));
  }
  r.add("H1 basis", basis_text.empty() ? "none" : basis_text, basis);
  r.add("Bowen-Franks", h.bowen_franks.to_string());
  r.add("det", int_text(h.det), int_json(h.det));
  r.add("abelianization", abelianization(h).to_string());
  const IntVector unit = class_in_G(h, *g, ClopenSet::whole(g));
  r.add("unit class", group_coordinates_text(h.h0, unit), vector_json(free_first(h.h0, unit)));
  r.add("period", std::to_string(p.period), p.period);
  if (p.mixing_exponent) r.add("mixing exponent", std::to_string(*p.mixing_exponent), *p.mixing_exponent);
}

std::string element_ref(const ElementFile& f) { return f.graph_path.string(); }

struct ExampleRow {
  std::string name;
  std::function<GraphPtr()> make;
  std::string h0;
  std::size_t h1_rank;
  long long det;
  std::string unit;
  std::string abelianization;
  bool classify_against_full2 = false;
};

struct RowResult {
  std::string name, h0, h1, det, unit, ab, extra;
  bool pass = false;
};

RowResult evaluate_row(const ExampleRow& row, const Options& opt) {
  RowResult out;
  out.name = row.name;
  const GraphPtr g = row.make();
  const Homology h = homology(*g);
  out.h0 = h.h0.to_string();
  out.h1 = std::to_string(h.h1_rank());
  out.det = int_text(h.det);
  out.unit = group_coordinates_text(h.h0, class_in_G(h, *g, ClopenSet::whole(g)));
  out.ab = abelianization(h).to_string();
  out.pass = out.h0 == row.h0 && h.h1_rank() == row.h1_rank && h.det == row.det &&
             out.unit == row.unit && out.ab == row.abelianization;
  if (row.classify_against_full2) {
    const GraphPtr f2 = full_shift(2);
    const Verdict v =
        classify(*g, ClopenSet::whole(g), *f2, ClopenSet::whole(f2), opt.orbit_bound);
    out.extra = std::string(verdict_name(v));
    out.pass = out.pass && v == Verdict::SufficientConditionHolds;
  }
  return out;
}

void cmd_examples(Report& r, const Options& opt) {
  const std::vector<ExampleRow> rows = {
      {"full shift (2,1)", [] { return full_shift(2, 1); }, "0", 0, -1, "()", "0"},
      {"full shift (3,1)", [] { return full_shift(3, 1); }, "Z_2", 0, -2, "(1)", "Z_2"},
      {"full shift (3,2)", [] { return full_shift(3, 2); }, "Z_2", 0, -2, "(0)", "Z_2"},
      {"golden mean", golden_mean, "0", 0, -1, "()", "0", true},
      {"[[2,1],[1,2]]", two_one_one_two, "Z", 1, 0, "(0)", "Z + Z_2"},
      {"free product p=q=3", [] { return free_product_boundary(3, 3); }, "Z_3", 0, -3, "(0)", "0"},
      {"free group k=2", [] { return free_group_boundary(2); }, "Z^2", 2, 0, "(0,0)", "Z^2 + (Z_2)^2"},
      {"free group k=3", [] { return free_group_boundary(3); }, "Z^3 + Z_2", 3, 0, "(0,0,0,1)",
       "Z^3 + (Z_2)^4"},
  };
  std::vector<std::future<RowResult>> futures;
  for (const auto& row : rows)
    futures.push_back(std::async(std::launch::async, [&row, &opt] { return evaluate_row(row, opt); }));
  Json table = Json::array();
  bool all = true;
  for (auto& f : futures) {
    const RowResult res = f.get();
    all = all && res.pass;
    std::string text = res.name + " | H0 " + res.h0 + " | H1 rank " + res.h1 + " | det " + res.det +
                       " | unit class " + res.unit + " | abelianization " + res.ab;
    if (!res.extra.empty()) text += " | vs full 2-shift " + res.extra;
    r.line(std::string(res.pass ? "PASS" : "FAIL") + " " + text);
    table.push_back({{"name", res.name}, {"H0", res.h0}, {"H1 rank", res.h1}, {"det", res.det},
                     {"unit class", res.unit}, {"abelianization", res.ab},
                     {"classification", res.extra}, {"status", res.pass ? "PASS" : "FAIL"}});
  }
  r.json()["rows"] = table;
  r.add("summary", all ? "all rows PASS" : "some rows FAIL", all);
}

IntVector parse_coordinates(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::exists(arg)) {
    Json j = read_json_file(arg);
    IntVector v;
    try {
      for (const auto& x : j) v.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()));
    } catch (const std::exception& e) {
      throw Error(Errc::ParseError, "kernel coordinates: " + std::string(e.what()));
    }
    return v;
  }
  for (char& c : text)
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ',') c = ' ';
  std::istringstream in(text);
  IntVector v;
  std::string tok;
  while (in >> tok) {
    try {
      v.emplace_back(tok);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + tok + "' in kernel coordinates");
    }
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations in topological full groups of one-sided shifts of finite type",
               "fullgroup"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--step-budget", opt.step_budget, "Enumeration step cap");
  app.add_option("--orbit-bound", opt.orbit_bound, "Torsion order cap for orbit decisions");

  std::string g1, g2, y1, y2, a_arg, b_arg, y_arg, elem, point_arg, w_arg;
  std::vector<std::string> elems;
  std::size_t order_bound = kDefaultOrderBound;

  auto* invariants = app.add_subcommand("invariants", "Homology and classification data of a graph");
  invariants->add_option("graph", g1)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Sufficient-condition check for [[G1|Y1]] ~ [[G2|Y2]]");
  classify_cmd->add_option("g1", g1)->required();
  classify_cmd->add_option("y1", y1)->required();
  classify_cmd->add_option("g2", g2)->required();
  classify_cmd->add_option("y2", y2)->required();
  auto* compose_cmd = app.add_subcommand("compose", "Product e1 e2 ... (rightmost acts first)");
  compose_cmd->add_option("elements", elems)->required()->expected(1, -1);
  auto* inverse_cmd = app.add_subcommand("inverse", "Inverse element");
  inverse_cmd->add_option("element", elem)->required();
  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical table of an element");
  canonical_cmd->add_option("element", elem)->required();
  auto* support_cmd = app.add_subcommand("support", "Support of an element");
  support_cmd->add_option("element", elem)->required();
  auto* order_cmd = app.add_subcommand("order", "Order of an element up to a bound");
  order_cmd->add_option("element", elem)->required();
  order_cmd->add_option("--bound", order_bound, "Largest order tried");
  auto* index_cmd = app.add_subcommand("index", "Index map value in H1");
  index_cmd->add_option("element", elem)->required();
  auto* zipper_cmd = app.add_subcommand("zipper", "Zipper defect of an element of [[G]]");
  zipper_cmd->add_option("element", elem)->required();
  auto* apply_cmd = app.add_subcommand("apply", "Image of an eventually periodic point");
  apply_cmd->add_option("element", elem)->required();
  apply_cmd->add_option("point", point_arg)->required();
  auto* hopf_cmd = app.add_subcommand("hopf", "G-set with source A and range B");
  hopf_cmd->add_option("graph", g1)->required();
  hopf_cmd->add_option("a", a_arg)->required();
  hopf_cmd->add_option("b", b_arg)->required();
  auto* transp_cmd = app.add_subcommand("transposition", "Involution swapping A and B inside Y");
  transp_cmd->add_option("graph", g1)->required();
  transp_cmd->add_option("a", a_arg)->required();
  transp_cmd->add_option("b", b_arg)->required();
  transp_cmd->add_option("y", y_arg)->required();
  auto* gens_cmd = app.add_subcommand("generators", "Finite generating set of [[G|Y]]_0");
  gens_cmd->add_option("graph", g1)->required();
  gens_cmd->add_option("y", y_arg)->required();
  auto* realize_cmd = app.add_subcommand("realize-index", "Element with prescribed index");
  realize_cmd->add_option("graph", g1)->required();
  realize_cmd->add_option("w", w_arg, "Kernel-basis coordinates: 1,-1 or a JSON file")->required();
  auto* fp_cmd = app.add_subcommand("free-product", "Elements generating Z_2 * Z_3");
  fp_cmd->add_option("graph", g1)->required();
  auto* cf_cmd = app.add_subcommand("canonical-form", "Canonical-form matrix with the same invariants");
  cf_cmd->add_option("graph", g1)->required();
  auto* examples_cmd = app.add_subcommand("examples", "Invariant table of the standard examples");

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format" || a == "--step-budget" || a == "--orbit-bound") {
      ++i;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == a;
    if (!known) {
      err << "error: UnknownVerb: '" << a << "' is not a command\n";
      return 2;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  Report r;
  try {
    if (*invariants) {
      cmd_invariants(r, load_graph(g1));
    } else if (*classify_cmd) {
      const GraphPtr a = load_graph(g1);
      const GraphPtr b = load_graph(g2);
      const Verdict v = classify(*a, load_clopen(a, y1), *b, load_clopen(b, y2), opt.orbit_bound);
      r.add("verdict", std::string(verdict_name(v)));
    } else if (*compose_cmd) {
      ElementFile first = load_element(elems.front());
      FullGroupElement acc = first.element;
      for (std::size_t i = 1; i < elems.size(); ++i) {
        ElementFile next = load_element(elems[i]);
        if (next.graph_path != first.graph_path && graph_to_json(*next.graph) != graph_to_json(*first.graph))
          throw Error(Errc::AmbientMismatch, "elements live on different graphs");
        acc = compose(acc, FullGroupElement(PrefixBijection(first.graph, next.element.pieces()),
                                            ClopenSet(first.graph, next.element.ambient().words())));
      }
      add_element(r, acc, element_ref(first));
    } else if (*inverse_cmd) {
      ElementFile f = load_element(elem);
      add_element(r, inverse(f.element), element_ref(f));
    } else if (*canonical_cmd) {
      ElementFile f = load_element(elem);
      add_element(r, canonicalize(f.element), element_ref(f));
    } else if (*support_cmd) {
      ElementFile f = load_element(elem);
      const ClopenSet s = support(f.element);
      r.add("support", set_text(s), clopen_to_json(s));
    } else if (*order_cmd) {
      ElementFile f = load_element(elem);
      const IntVector idx = index(f.element);
      if (!is_zero(idx)) {
        r.add("order", "infinite", "infinite");
        r.add("reason", "index " + to_string(idx) + " is nonzero");
      } else if (auto k = order_up_to(f.element, order_bound)) {
        r.add("order", std::to_string(*k), *k);
      } else {
        r.add("order", "unknown", "unknown");
        r.add("reason", "no order up to " + std::to_string(order_bound));
      }
    } else if (*index_cmd) {
      ElementFile f = load_element(elem);
      const IntVector vec = index_vector(f.element);
      const IntVector coords = kernel_coordinates(homology(*f.graph), vec);
      r.add("index", index_text(coords), vector_json(coords));
      r.add("kernel vector", to_string(vec), vector_json(vec));
    } else if (*zipper_cmd) {
      ElementFile f = load_element(elem);
      const ZipperDefect z = zipper_defect(f.element, opt.step_budget);
      r.add("defect", std::to_string(z.defect), z.defect);
      r.add("m", std::to_string(z.m), z.m);
    } else if (*apply_cmd) {
      ElementFile f = load_element(elem);
      const Point x = point_from_json(*f.graph, read_json_file(point_arg));
      if (!point_in(f.element.ambient(), x))
        throw Error(Errc::PointOutsideAmbient, "point is outside the ambient set");
      const Point y = apply_point(f.element, x);
      r.add("point", point_text(*f.graph, x), point_to_json(*f.graph, x));
      r.add("image", point_text(*f.graph, y), point_to_json(*f.graph, y));
    } else if (*hopf_cmd) {
      const GraphPtr g = load_graph(g1);
      const PrefixBijection h = hopf_witness(load_clopen(g, a_arg), load_clopen(g, b_arg));
      r.add("source", set_text(h.source()), clopen_to_json(h.source()));
      r.add("range", set_text(h.range()), clopen_to_json(h.range()));
      add_table(r, h);
    } else if (*transp_cmd) {
      const GraphPtr g = load_graph(g1);
      const FullGroupElement t =
          transposition(load_clopen(g, a_arg), load_clopen(g, b_arg), load_clopen(g, y_arg));
      add_element(r, t, g1);
    } else if (*gens_cmd) {
      const GraphPtr g = load_graph(g1);
      const GeneratingSet gs = generating_set(load_clopen(g, y_arg), opt.step_budget);
      r.add("count", std::to_string(gs.elements.size()), gs.elements.size());
      r.add("m", std::to_string(gs.m), gs.m);
      r.add("conjugated", gs.conjugator ? "yes" : "no", gs.conjugator.has_value());
      Json list = Json::array();
      for (std::size_t i = 0; i < gs.elements.size(); ++i) {
        const auto& e = gs.elements[i];
        std::string text;
        for (const auto& p : e.pieces())
          if (p.range != p.domain)
            text += (text.empty() ? "" : ", ") + format_word(*g, p.range) + " <- " + format_word(*g, p.domain);
        r.line("  generator " + std::to_string(i + 1) + ": " + text);
        list.push_back(table_to_json(e.table()));
      }
      r.json()["generators"] = list;
    } else if (*realize_cmd) {
      const GraphPtr g = load_graph(g1);
      const Homology h = homology(*g);
      const IntVector coords = parse_coordinates(w_arg);
      const IntVector w = kernel_vector(h, coords);
      const RealizedIndex res = realize_index_element(g, w);
      add_element(r, res.element, g1);
      const IntVector got = kernel_coordinates(h, res.index_vector);
      r.add("index", index_text(got), vector_json(got));
      r.add("kernel vector", to_string(res.index_vector), vector_json(res.index_vector));
    } else if (*fp_cmd) {
      const GraphPtr g = load_graph(g1);
      const FreeProductWitness fp = free_product_witness(g);
      r.add("A", set_text(fp.a), clopen_to_json(fp.a));
      r.add("B", set_text(fp.b), clopen_to_json(fp.b));
      add_table(r, fp.alpha.table(), "alpha");
      add_table(r, fp.beta.table(), "beta");
      const auto oa = order_up_to(fp.alpha, 2);
      const auto ob = order_up_to(fp.beta, 3);
      r.add("alpha order", oa ? std::to_string(*oa) : "unknown");
      r.add("beta order", ob ? std::to_string(*ob) : "unknown");
    } else if (*cf_cmd) {
      const GraphPtr g = load_graph(g1);
      const IntMatrix n = canonical_form_matrix(*g);
      Json rows = Json::array();
      for (std::size_t i = 0; i < n.rows(); ++i) rows.push_back(vector_json(n.row(i)));
      r.add("N", n.to_string(), rows);
      r.add("det", int_text(homology(*g).det), int_json(homology(*g).det));
    } else if (*examples_cmd) {
      cmd_examples(r, opt);
    }
  } catch (const Error& e) {
    if (opt.format == "json")
      out << Json{{"error", std::string(e.name())}, {"message", e.detail()}}.dump(2) << '\n';
    else
      err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  r.print(out, opt);
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace fullgroup::cli
