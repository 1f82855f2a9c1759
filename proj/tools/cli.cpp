#include "cli.hpp"

#include "reflact/json_io.hpp"
#include "reflact/kernels.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace reflact::cli {
namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string key_str(const std::vector<int>& v) { return "[" + join(v, ",") + "]"; }

bool is_file_spec(const std::string& s) {
  return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

// Rows of strings rendered in any of the four output formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;  // json emits these columns as numbers

  void print(std::ostream& out, const std::string& fmt) const {
    if (fmt == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o;
        for (std::size_t c = 0; c < header.size(); ++c) {
          if (c < numeric.size() && numeric[c]) o[header[c]] = std::stol(r[c]);
          else o[header[c]] = r[c];
        }
        arr.push_back(o);
      }
      out << arr.dump(1) << "\n";
    } else if (fmt == "csv") {
      out << join_str(header, ",") << "\n";
      for (const auto& r : rows) {
        std::vector<std::string> q;
        for (const auto& x : r) q.push_back(x.find(',') == std::string::npos ? x : "\"" + x + "\"");
        out << join_str(q, ",") << "\n";
      }
    } else if (fmt == "tex") {
      out << "\\begin{tabular}{" << std::string(header.size(), 'l') << "}\n\\toprule\n";
      out << join_str(tex_row(header), " & ") << " \\\\\n\\midrule\n";
      for (const auto& r : rows) out << join_str(tex_row(r), " & ") << " \\\\\n";
      out << "\\bottomrule\n\\end{tabular}\n";
    } else {
      std::vector<std::size_t> w(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        w[c] = header[c].size();
        for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
          s += r[c];
          if (c + 1 < r.size()) s += std::string(w[c] - r[c].size() + 2, ' ');
        }
        out << s << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
    }
  }

  static std::string join_str(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
  }
  static std::vector<std::string> tex_row(const std::vector<std::string>& r) {
    std::vector<std::string> out;
    for (const auto& x : r) {
      std::string y = x;
      if (y.find('_') != std::string::npos || y.find('^') != std::string::npos) y = "$" + y + "$";
      out.push_back(y);
    }
    return out;
  }
};

void print_kv(std::ostream& out, const std::string& fmt, const std::vector<std::pair<std::string, json>>& kv) {
  if (fmt == "json") {
    json o = json::object();
    for (const auto& [k, v] : kv) o[k] = v;
    out << o.dump(1) << "\n";
    return;
  }
  Table t{{"key", "value"}, {}, {}};
  for (const auto& [k, v] : kv) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  if (fmt == "text") {
    for (const auto& r : t.rows) out << r[0] << ": " << r[1] << "\n";
  } else {
    t.print(out, fmt);
  }
}

std::string exceptional_file(const std::string& spec) {
  if (spec == "H3" || spec == "F4") return data_dir() + "/" + spec + ".json";
  if (is_file_spec(spec)) return spec;
  return {};
}

int cmd_info(const Options& o, std::ostream& out) {
  std::optional<FamilySpec> fam;
  const MatrixGroup g = build_group(o.group, o.order_cap, &fam);
  const auto refl = reflections(g);
  std::vector<std::pair<std::string, json>> kv = {
      {"group", o.group},
      {"order", g.order()},
      {"conductor", g.conductor()},
      {"dimension", g.dim()},
      {"generators", g.num_generators()},
      {"reflections", refl.size()},
      {"rank", refl.empty() ? 0 : reflection_arrangement(g).rank()},
      {"linear characters", linear_characters(g).size()},
  };
  if (!o.arrangement.empty()) {
    auto bp = build_pair(o);
    kv.push_back({"arrangement", bp.arrangement_label});
    kv.push_back({"hyperplanes", bp.pair->arrangement().size()});
    kv.push_back({"arrangement rank", bp.pair->os().rank()});
    kv.push_back({"flats", bp.pair->lattice().size()});
    kv.push_back({"orbits", bp.pair->orbits().size()});
  }
  print_kv(out, o.format, kv);
  return kOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  Arrangement a;
  if (!o.arrangement.empty() && !o.group.empty()) {
    a = build_pair(o).pair->arrangement();
  } else if (!o.arrangement.empty()) {
    if (is_file_spec(o.arrangement)) {
      std::ifstream f(o.arrangement);
      if (!f) throw ValidationError("cannot read " + o.arrangement);
      a = arrangement_from_json(json::parse(f));
    } else if (auto fa = parse_arrangement_name(o.arrangement)) {
      a = make_arrangement(fa->kind, fa->r, fa->n);
    } else {
      throw ValidationError("unknown arrangement " + o.arrangement);
    }
  } else {
    a = reflection_arrangement(build_group(o.group, o.order_cap));
  }
  const auto lat = build_lattice(a);
  if (o.format == "text" && !o.degree) {
    out << "hyperplanes: " << a.size() << "\nrank: " << lat.rank() << "\n";
    for (int k = 0; k <= lat.rank(); ++k) out << "codim " << k << ": " << lat.by_codim(k).size() << " flats\n";
    return kOk;
  }
  Table t{{"id", "codim", "key"}, {}, {true, true, false}};
  for (int k = 0; k <= lat.rank(); ++k) {
    if (o.degree && *o.degree != k) continue;
    for (int f : lat.by_codim(k)) t.rows.push_back({std::to_string(f), std::to_string(k), key_str(lat.flat(f).key)});
  }
  t.print(out, o.format);
  return kOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  auto bp = build_pair(o);
  const Pair& p = *bp.pair;
  Table t{{"orbit", "codim", "size", "Z", "N", "type", "rep"}, {}, {true, true, true, true, true, false, false}};
  const auto& names = p.orbit_names();
  for (std::size_t i = 0; i < p.orbits().size(); ++i) {
    const auto& d = p.orbits()[i];
    if (o.degree && *o.degree != d.codim) continue;
    t.rows.push_back({std::to_string(i), std::to_string(d.codim), std::to_string(d.orbit.size()), std::to_string(d.Z.size()),
                      std::to_string(d.N.size()), names[i], key_str(p.lattice().flat(d.rep).key)});
  }
  t.print(out, o.format);
  return kOk;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  auto bp = build_pair(o);
  const Pair& p = *bp.pair;
  const auto chi = select_character(p.group(), o.character);
  auto rep = isotypic_dims_orbitwise(p, chi);
  rep.poincare = poincare_invariants(p, chi);
  if (o.format == "json") {
    if (o.degree) {
      std::erase_if(rep.orbits, [&](const OrbitReport& r) { return r.codim != *o.degree; });
    }
    out << invariant_report_to_json(rep).dump(1) << "\n";
  } else if (o.format == "csv") {
    out << "degree,dim\n";
    for (std::size_t k = 0; k < rep.poincare.size(); ++k)
      if (!o.degree || *o.degree == static_cast<int>(k)) out << k << "," << rep.poincare[k] << "\n";
  } else if (o.format == "tex") {
    // One column per degree listing the orbits with nonzero K_T^chi.
    const int r = p.os().rank();
    out << "\\begin{tabular}{l" << std::string(r + 1, 'c') << "}\n\\toprule\n$\\deg$";
    for (int k = 0; k <= r; ++k) out << " & $k=" << k << "$";
    out << " \\\\\n\\midrule\n$T$";
    for (int k = 0; k <= r; ++k) {
      std::vector<std::string> ts;
      for (const auto& x : rep.orbits)
        if (x.codim == k && x.dim) ts.push_back(x.type + (x.dim > 1 ? " (" + std::to_string(x.dim) + ")" : ""));
      out << " & " << (ts.empty() ? "-" : "$" + Table::join_str(ts, ",\\ ") + "$");
    }
    out << " \\\\\n$\\dim$";
    for (int k = 0; k <= r; ++k) out << " & " << rep.poincare[k];
    out << " \\\\\n\\bottomrule\n\\end{tabular}\n";
    out << "% P(t) = " << format_poly(rep.poincare) << "\n";
  } else if (o.degree) {
    const int k = *o.degree;
    out << (k >= 0 && k < static_cast<int>(rep.poincare.size()) ? rep.poincare[k] : 0) << "\n";
  } else {
    out << format_poly(rep.poincare) << "\n";
  }
  return kOk;
}

std::string mono_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (int h : m) s += "h" + std::to_string(h);
  return s;
}

int cmd_basis(const Options& o, std::ostream& out) {
  auto bp = build_pair(o);
  const Pair& p = *bp.pair;
  const auto b = theorem4_basis(p);
  if (o.format == "json") {
    json entries = json::array();
    for (const auto& e : b.entries) {
      json projs = json::array();
      for (const auto& x : e.projections) projs.push_back(os_element_to_json(p.os(), x));
      entries.push_back({{"type", e.type}, {"orbit", e.orbit}, {"monomials", e.monomials}, {"projections", projs}});
    }
    out << json{{"certified", true}, {"cardinality", b.cardinality}, {"entries", entries}}.dump(1) << "\n";
    return kOk;
  }
  Table t{{"type", "orbit", "degree", "monomial", "terms"}, {}, {false, true, true, false, true}};
  for (const auto& e : b.entries)
    for (std::size_t i = 0; i < e.monomials.size(); ++i) {
      const int k = static_cast<int>(e.monomials[i].size());
      if (o.degree && *o.degree != k) continue;
      t.rows.push_back({e.type, std::to_string(e.orbit), std::to_string(k), mono_str(e.monomials[i]),
                        std::to_string(e.projections[i].coeffs.size())});
    }
  t.print(out, o.format);
  if (o.format == "text") out << "certified basis of " << b.cardinality << " invariants\n";
  return kOk;
}

int cmd_characters(const Options& o, std::ostream& out) {
  const MatrixGroup g = build_group(o.group, o.order_cap);
  const auto chars = linear_characters(g);
  const auto det = det_character(g);
  const auto dinv = inverse_character(det);
  const auto dl = determinant_like_characters(g);
  Table t{{"index", "order", "generator values", "tags"}, {}, {true, true, false, false}};
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& c = chars[i];
    int ord = 1;
    for (int a : c.exps) ord = std::lcm(ord, c.e / std::gcd(c.e, a == 0 ? c.e : a));
    std::vector<std::string> vals;
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const int a = c.exps[g.generator_element(s)];
      const int d = std::gcd(a, c.e);
      vals.push_back(a == 0 ? "1" : "z" + std::to_string(c.e / d) + "^" + std::to_string(a / d));
    }
    std::vector<std::string> tags;
    if (c.is_trivial()) tags.push_back("trivial");
    if (c == det) tags.push_back("det");
    if (c == dinv) tags.push_back("det-inv");
    if (std::find(dl.begin(), dl.end(), c) != dl.end()) tags.push_back("det-like");
    t.rows.push_back({std::to_string(i), std::to_string(ord), Table::join_str(vals, " "), Table::join_str(tags, " ")});
  }
  t.print(out, o.format);
  return kOk;
}

int cmd_multiplicity(const Options& o, std::ostream& out) {
  auto bp = build_pair(o);
  const Pair& p = *bp.pair;
  const auto classes = conjugacy_classes(p.group());
  std::vector<Cyc> phi;
  if (!o.classfn.empty()) {
    std::ifstream f(o.classfn);
    if (!f) throw ValidationError("cannot read " + o.classfn);
    const json j = json::parse(f);
    const json& vals = j.is_object() ? j.at("values") : j;
    for (const auto& v : vals) phi.push_back(cyc_from_json(v));
  } else {
    const auto chi = select_character(p.group(), o.character);
    for (const auto& c : classes) phi.push_back(chi.value(c.front()));
  }
  Table t{{"degree", "multiplicity"}, {}, {true, false}};
  for (int k = 0; k <= p.os().rank(); ++k) {
    if (o.degree && *o.degree != k) continue;
    t.rows.push_back({std::to_string(k), to_string(multiplicity_classfn(p, phi, k))});
  }
  t.print(out, o.format);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cases = verify_suite(o.table, o.max_r, o.max_n, o.jobs);
  bool ok = true;
  for (const auto& c : cases) ok = ok && c.pass;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : cases)
      arr.push_back({{"suite", c.suite}, {"case", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << json{{"suite", o.table}, {"pass", ok}, {"cases", arr}}.dump(1) << "\n";
  } else if (o.format == "csv" || o.format == "tex") {
    Table t{{"suite", "case", "result", "detail"}, {}, {}};
    for (const auto& c : cases) t.rows.push_back({c.suite, c.name, c.pass ? "pass" : "FAIL", c.detail});
    t.print(out, o.format);
  } else {
    for (const auto& c : cases)
      out << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    out << o.table << ": " << std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; })
        << "/" << cases.size() << " passed\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

std::string format_poly(const std::vector<long>& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!s.empty()) s += c[k] > 0 ? "+" : "-";
    else if (c[k] < 0) s += "-";
    const long a = std::labs(c[k]);
    if (k == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "t";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

MatrixGroup build_group(const std::string& spec, std::size_t cap, std::optional<FamilySpec>* family) {
  if (spec.empty()) throw ValidationError("--group is required");
  if (auto f = parse_group_name(spec)) {
    if (f->r < 1 || f->p < 1 || f->n < 1 || f->r % f->p != 0) throw ValidationError("G(r,p,n) needs p | r and n >= 1");
    if (family) *family = f;
    return make_grpn(f->r, f->p, f->n, cap);
  }
  const std::string file = exceptional_file(spec);
  if (file.empty()) throw ValidationError("unknown group " + spec + " (expected G(r,p,n), W(n), H3, F4 or a .json file)");
  if (!std::filesystem::exists(file)) throw ValidationError("group file not found: " + file);
  return load_group_file(file, cap);
}

BuiltPair build_pair(const Options& o) {
  std::optional<FamilySpec> gf;
  MatrixGroup g = build_group(o.group, o.order_cap, &gf);
  BuiltPair out;
  out.group_label = o.group;
  std::optional<FamilySpec> family;
  Arrangement a;
  if (o.arrangement.empty() || o.arrangement == "reflection") {
    a = reflection_arrangement(g);
    out.arrangement_label = "reflection arrangement";
    if (gf) {
      family = *gf;
      family->kind = gf->r == 1 ? ArrKind::Braid : (gf->p < gf->r ? ArrKind::Full : ArrKind::Zero);
      if (gf->r == 1) family->r = 1;
    }
  } else if (is_file_spec(o.arrangement)) {
    std::ifstream f(o.arrangement);
    if (!f) throw ValidationError("cannot read " + o.arrangement);
    a = arrangement_from_json(json::parse(f));
    out.arrangement_label = o.arrangement;
  } else if (auto fa = parse_arrangement_name(o.arrangement)) {
    a = make_arrangement(fa->kind, fa->r, fa->n);
    out.arrangement_label = o.arrangement;
    if (gf && gf->n == fa->n && gf->r == fa->r) family = FamilySpec{gf->r, gf->p, gf->n, fa->kind};
  } else {
    throw ValidationError("unknown arrangement " + o.arrangement + " (expected A_n(r), A_n^0(r), braid(n) or a .json file)");
  }
  if (a.dim() != g.dim()) throw ValidationError("group and arrangement dimensions differ");
  try {
    out.pair = std::make_unique<Pair>(std::move(g), std::move(a), family);
  } catch (const NotStable& e) {
    throw ValidationError(std::string("the group does not permute the arrangement: ") + e.what());
  }
  const std::string file = exceptional_file(o.group);
  if (!file.empty()) {
    if (auto lr = load_long_root(file)) out.pair->set_long_root(*lr);
  }
  std::string cox = o.cox;
  if (cox.empty() && (o.group == "H3" || o.group == "F4") && (o.arrangement.empty() || o.arrangement == "reflection"))
    cox = data_dir() + "/" + o.group + "_cox.json";
  if (!cox.empty()) out.pair->set_cox(load_cox_file(cox, out.pair->arrangement()));
  return out;
}

LinearCharacter select_character(const MatrixGroup& g, const std::string& spec) {
  if (spec.empty() || spec == "trivial") return trivial_character(g);
  if (spec == "det") return det_character(g);
  if (spec == "det-inv") return inverse_character(det_character(g));
  if (spec.rfind("index:", 0) == 0) {
    const auto chars = linear_characters(g);
    std::size_t i = 0;
    try {
      i = std::stoul(spec.substr(6));
    } catch (const std::exception&) {
      throw ValidationError("bad character index in " + spec);
    }
    if (i >= chars.size())
      throw ValidationError("character index " + std::to_string(i) + " out of range; the group has " +
                            std::to_string(chars.size()) + " linear characters");
    return chars[i];
  }
  throw ValidationError("unknown character " + spec + " (expected trivial, det, det-inv or index:<i>)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotypic components of arrangement cohomology under reflection groups"};
  app.require_subcommand(1);
  Options o;
  int degree = -1;

  auto common = [&](CLI::App* s, bool needs_group) {
    auto* g = s->add_option("--group", o.group, "G(r,p,n), W(n), H3, F4 or a group .json file");
    if (needs_group) g->required();
    s->add_option("--arrangement", o.arrangement, "A_n(r), A_n^0(r), braid(n), reflection or an arrangement .json file");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "tex"}));
    s->add_option("--order-cap", o.order_cap, "Largest group order to enumerate");
    s->add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)");
  };
  auto* info = app.add_subcommand("info", "Group and arrangement summary");
  common(info, true);
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice");
  common(lattice, false);
  lattice->add_option("--degree", degree, "Only flats of this codimension");
  auto* orbits = app.add_subcommand("orbits", "Orbits of G on the lattice");
  common(orbits, true);
  orbits->add_option("--degree", degree, "Only orbits of this codimension");
  auto* poincare = app.add_subcommand("poincare", "Isotypic Poincare polynomial");
  common(poincare, true);
  poincare->add_option("--character", o.character, "trivial, det, det-inv or index:<i>");
  poincare->add_option("--degree", degree, "Report a single degree");
  auto* basis = app.add_subcommand("invariant-basis", "Certified basis of the invariants");
  common(basis, true);
  basis->add_option("--cox", o.cox, "Cox tuple file");
  basis->add_option("--degree", degree, "Only elements of this degree");
  auto* characters = app.add_subcommand("characters", "Linear characters of G");
  common(characters, true);
  auto* mult = app.add_subcommand("multiplicity", "Pairing of H^k with a class function");
  common(mult, true);
  mult->add_option("--character", o.character, "trivial, det, det-inv or index:<i>");
  mult->add_option("--classfn", o.classfn, "JSON list of values per conjugacy class");
  mult->add_option("--degree", degree, "Report a single degree");
  auto* verify = app.add_subcommand("verify", "Compare against the shipped expected values");
  verify->add_option("--table", o.table, "table1, table2, cor1, cor2, thm4, thm6, cor5 or acyclic")->required();
  verify->add_option("--max-r", o.max_r, "Largest r (0 = suite default)");
  verify->add_option("--max-n", o.max_n, "Largest n (0 = suite default)");
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "tex"}));
  verify->add_option("--jobs", o.jobs, "Cases run in parallel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  if (degree >= 0) o.degree = degree;
  if (o.jobs > 0) set_num_threads(o.jobs);

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (lattice->parsed()) {
      if (o.group.empty() && o.arrangement.empty()) throw ValidationError("lattice needs --arrangement or --group");
      return cmd_lattice(o, out);
    }
    if (orbits->parsed()) return cmd_orbits(o, out);
    if (poincare->parsed()) return cmd_poincare(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (characters->parsed()) return cmd_characters(o, out);
    if (mult->parsed()) return cmd_multiplicity(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << " (raise --order-cap)\n";
    return kValidation;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kValidation;
}

}  // namespace reflact::cli
