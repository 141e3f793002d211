#include "lojax/cli.hpp"

#include "lojax/error.hpp"
#include "lojax/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lojax::cli {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Monomial parsing

struct Token {
  enum Kind { Ident, Number, Caret, Star, Comma, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '^') {
      out.push_back({Token::Caret, "^", i++});
    } else if (c == '*') {
      out.push_back({Token::Star, "*", i++});
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", i++});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Number, text.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Token::Ident, text.substr(start, i - start), start});
    } else if (c == '-') {
      throw_invalid("negative exponent or sign at position " + std::to_string(i));
    } else {
      throw_invalid(std::string("unexpected character '") + c + "' at position " +
                    std::to_string(i));
    }
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

}  // namespace

std::vector<std::string> infer_variables(const std::string& text) {
  std::vector<std::string> vars;
  for (const auto& tok : tokenize(text)) {
    if (tok.kind != Token::Ident) continue;
    if (std::find(vars.begin(), vars.end(), tok.text) == vars.end()) vars.push_back(tok.text);
  }
  return vars;
}

MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables) {
  const int n = static_cast<int>(variables.size());
  if (n == 0) throw_invalid("no variables declared and none inferable");
  for (std::size_t a = 0; a < variables.size(); ++a)
    for (std::size_t b = a + 1; b < variables.size(); ++b)
      if (variables[a] == variables[b]) throw_invalid("duplicate variable name " + variables[a]);

  auto toks = tokenize(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const Token& { return toks[pos]; };
  auto advance = [&]() -> const Token& { return toks[pos++]; };

  std::vector<ZVec> gens;
  while (true) {
    ZVec exp(n, Int(0));
    bool any_factor = false;
    while (true) {
      const Token& tok = peek();
      if (tok.kind == Token::Number) {
        advance();  // numeric coefficient: ignored
        any_factor = true;
      } else if (tok.kind == Token::Ident) {
        advance();
        auto it = std::find(variables.begin(), variables.end(), tok.text);
        if (it == variables.end())
          throw_invalid("unknown variable '" + tok.text + "' at position " +
                        std::to_string(tok.pos));
        int var = static_cast<int>(it - variables.begin());
        Int e = 1;
        if (peek().kind == Token::Caret) {
          advance();
          if (peek().kind != Token::Number)
            throw_invalid("exponent expected at position " + std::to_string(peek().pos));
          e = Int(advance().text);
        }
        exp[var] += e;
        any_factor = true;
      } else {
        break;
      }
      if (peek().kind == Token::Star) {
        advance();
        if (peek().kind != Token::Ident && peek().kind != Token::Number)
          throw_invalid("factor expected after '*' at position " + std::to_string(peek().pos));
      }
    }
    if (!any_factor)
      throw_invalid("empty generator at position " + std::to_string(peek().pos));
    gens.push_back(std::move(exp));
    if (peek().kind == Token::Comma) {
      advance();
      continue;
    }
    if (peek().kind == Token::End) break;
    throw_invalid("unexpected token '" + peek().text + "' at position " +
                  std::to_string(peek().pos));
  }
  return MonomialIdeal(n, std::move(gens), variables);
}

IdealSpec load_spec_json(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw_invalid(std::string("malformed JSON input: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("ideals"))
    throw_invalid("input JSON must have 'variables' and 'ideals'");
  IdealSpec spec;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw_invalid("variable names must be strings");
    spec.variables.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(spec.variables.size());
  for (const auto& [name, gens] : doc["ideals"].items()) {
    if (!gens.is_array() || gens.empty())
      throw_invalid("ideal '" + name + "' must be a non-empty array of generators");
    std::vector<ZVec> rows;
    std::string text_gens;
    bool has_rows = false, has_text = false;
    for (const auto& g : gens) {
      if (g.is_array()) {
        has_rows = true;
        ZVec row;
        for (const auto& e : g) {
          // Accept plain integers and decimal integer strings; the report
          // echo serializes exponents as strings to keep floats out.
          Int value;
          if (e.is_number_integer()) {
            value = Int(e.get<long long>());
          } else if (e.is_string()) {
            try {
              value = Int(e.get<std::string>());
            } catch (const std::exception&) {
              throw_invalid("ideal '" + name + "': malformed exponent string");
            }
          } else {
            throw_invalid("ideal '" + name + "': exponents must be integers");
          }
          if (value < 0) throw_invalid("ideal '" + name + "': exponents must be nonnegative");
          row.push_back(std::move(value));
        }
        if (static_cast<int>(row.size()) != n)
          throw_invalid("ideal '" + name + "': exponent row arity mismatch");
        rows.push_back(std::move(row));
      } else if (g.is_string()) {
        has_text = true;
        if (!text_gens.empty()) text_gens += ",";
        text_gens += g.get<std::string>();
      } else {
        throw_invalid("ideal '" + name + "': generators must be strings or exponent rows");
      }
    }
    if (has_rows && has_text)
      throw_invalid("ideal '" + name + "': mixing strings and exponent rows is not supported");
    MonomialIdeal ideal = has_rows ? MonomialIdeal(n, std::move(rows), spec.variables)
                                   : parse_ideal(text_gens, spec.variables);
    spec.ideals.emplace(name, std::move(ideal));
  }
  if (spec.ideals.empty()) throw_invalid("input JSON declares no ideals");
  return spec;
}

namespace {

// ---------------------------------------------------------------------------
// Serialization

Json json_zvec(const ZVec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(int_to_string(c));
  return a;
}

Json json_qvec(const QVec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(rat_to_string(c));
  return a;
}

Json json_ideal(const MonomialIdeal& ideal) {
  Json a = Json::array();
  for (const auto& g : ideal.generators()) a.push_back(json_zvec(g));
  return a;
}

Json json_newton(const NewtonPolyhedron& p) {
  Json out;
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(json_qvec(v));
  out["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json h;
    h["normal"] = json_zvec(f.normal);
    h["offset"] = rat_to_string(f.offset);
    facets.push_back(h);
  }
  out["facets"] = facets;
  Json intercepts = Json::array();
  for (const auto& t : p.axis_intercepts)
    intercepts.push_back(t ? Json(rat_to_string(*t)) : Json(nullptr));
  out["axis_intercepts"] = intercepts;
  out["convenient"] = p.convenient();
  Json faces = Json::array();
  for (const auto& f : p.compact_faces) {
    Json face;
    face["dim"] = f.dim;
    Json fv = Json::array();
    for (const auto& v : f.vertices) fv.push_back(json_qvec(v));
    face["vertices"] = fv;
    faces.push_back(face);
  }
  out["compact_faces"] = faces;
  return out;
}

const char* kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Exact: return "EXACT";
    case EntryKind::UpperBound: return "UPPER_BOUND";
    case EntryKind::Absent: return "ABSENT";
  }
  return "ABSENT";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "true";
    case Verdict::Fails: return "false";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

Json json_loja(const LojaReport& rep) {
  Json out;
  out["n"] = rep.n;
  out["M"] = int_to_string(rep.level);
  Json a = Json::array();
  for (const auto& x : rep.a) a.push_back(rat_to_string(x));
  out["a"] = a;
  out["c"] = int_to_string(rep.c);
  out["inclusion"] = rep.inclusion;
  out["diagonal"] = rep.diagonal;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json je;
    je["i"] = e.index;
    je["kind"] = kind_name(e.kind);
    je["value"] = e.value ? Json(rat_to_string(*e.value)) : Json(nullptr);
    entries.push_back(je);
  }
  out["L"] = entries;
  out["notes"] = rep.notes;
  return out;
}

Json json_mult(const MultiplicityTable& t) {
  Json out;
  out["n"] = t.n;
  out["e_I"] = int_to_string(t.e_i);
  out["e_J"] = int_to_string(t.e_j);
  Json mixed = Json::array();
  for (const auto& e : t.mixed) mixed.push_back(int_to_string(e));
  out["mixed"] = mixed;
  Json cov;
  for (const auto& [key, value] : t.covolumes)
    cov[std::to_string(key.first) + "+" + std::to_string(key.second)] = rat_to_string(value);
  out["covolumes"] = cov;
  return out;
}

Json json_hickel(const HickelReport& rep) {
  Json out;
  out["ratio_e"] = rat_to_string(rep.ratio_e);
  out["product_L"] = rep.product_l ? Json(rat_to_string(*rep.product_l)) : Json(nullptr);
  out["product_a"] = rat_to_string(rep.product_a);
  out["is_hickel"] = verdict_name(rep.is_hickel);
  out["gap"] = rep.gap ? Json(rat_to_string(*rep.gap)) : Json(nullptr);
  out["equality_58"] = rep.equality_58;
  Json per = Json::array();
  for (const auto& c : rep.per_index) {
    Json jc;
    jc["i"] = c.index;
    jc["ratio"] = rat_to_string(c.ratio);
    jc["kind"] = kind_name(c.kind);
    jc["value"] = c.value ? Json(rat_to_string(*c.value)) : Json(nullptr);
    jc["satisfied"] = c.satisfied;
    jc["equality"] = c.equality;
    per.push_back(jc);
  }
  out["per_index"] = per;
  return out;
}

// ---------------------------------------------------------------------------
// Command context

struct Options {
  std::string input_path;
  std::string name;
  std::string name_i;
  std::string name_j;
  std::string inline_ideal;
  std::string inline_i;
  std::string inline_j;
  std::string vars;
  std::string point;
  std::string format = "text";
  std::vector<std::string> tuple;
  bool bounds_ok = false;
  bool cross_check = kCrossCheckDefault;
  int sigma_cap = 0;  // 0: resolve from env / default
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    // trim
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

IdealSpec load_input(const Options& opt) {
  std::ifstream in(opt.input_path);
  if (!in) throw_invalid("cannot open input file " + opt.input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_spec_json(buf.str());
}

MonomialIdeal inline_ideal(const std::string& text, const std::string& vars) {
  std::vector<std::string> names =
      vars.empty() ? infer_variables(text) : split_commas(vars);
  return parse_ideal(text, names);
}

MonomialIdeal single_ideal(const Options& opt) {
  if (!opt.inline_ideal.empty()) return inline_ideal(opt.inline_ideal, opt.vars);
  if (opt.input_path.empty()) throw_invalid("provide --ideal or --input");
  IdealSpec spec = load_input(opt);
  if (!opt.name.empty()) {
    auto it = spec.ideals.find(opt.name);
    if (it == spec.ideals.end()) throw_invalid("no ideal named '" + opt.name + "' in input");
    return it->second;
  }
  if (spec.ideals.size() == 1) return spec.ideals.begin()->second;
  throw_invalid("input declares several ideals; select one with --name");
}

std::pair<MonomialIdeal, MonomialIdeal> ideal_pair(const Options& opt) {
  if (!opt.inline_i.empty() || !opt.inline_j.empty()) {
    if (opt.inline_i.empty() || opt.inline_j.empty())
      throw_invalid("provide both --ideal-I and --ideal-J");
    // Shared variable universe: infer over the concatenation when not given.
    std::string vars = opt.vars;
    if (vars.empty()) {
      auto names = infer_variables(opt.inline_i + "," + opt.inline_j);
      std::string joined;
      for (const auto& n : names) {
        if (!joined.empty()) joined += ",";
        joined += n;
      }
      vars = joined;
    }
    return {inline_ideal(opt.inline_i, vars), inline_ideal(opt.inline_j, vars)};
  }
  if (opt.input_path.empty()) throw_invalid("provide --ideal-I/--ideal-J or --input with --pair");
  IdealSpec spec = load_input(opt);
  std::string ni = opt.name_i.empty() ? "I" : opt.name_i;
  std::string nj = opt.name_j.empty() ? "J" : opt.name_j;
  auto it_i = spec.ideals.find(ni);
  auto it_j = spec.ideals.find(nj);
  if (it_i == spec.ideals.end()) throw_invalid("no ideal named '" + ni + "' in input");
  if (it_j == spec.ideals.end()) throw_invalid("no ideal named '" + nj + "' in input");
  return {it_i->second, it_j->second};
}

int resolve_sigma_cap(const Options& opt) {
  if (opt.sigma_cap > 0) return opt.sigma_cap;
  if (const char* env = std::getenv("LOJAX_SIGMA_CAP")) {
    int v = std::atoi(env);
    if (v < 1) throw_invalid("LOJAX_SIGMA_CAP must be a positive integer");
    return v;
  }
  return kDefaultSigmaCap;
}

void emit(std::ostream& os, const Options& opt, const Json& doc,
          const std::function<void(std::ostream&)>& text_writer) {
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    text_writer(os);
  }
}

std::string loja_text_lines(const LojaReport& rep) {
  std::ostringstream os;
  os << "M: " << rep.level << "\n";
  os << "c: " << rep.c << "\n";
  os << "inclusion: " << (rep.inclusion ? "true" : "false") << "\n";
  os << "diagonal: " << (rep.diagonal ? "true" : "false") << "\n";
  os << "a:";
  for (const auto& a : rep.a) os << " " << rat_to_string(a);
  os << "\n";
  for (int i = rep.n; i >= 1; --i) {
    const auto& e = rep.entry(i);
    os << "L(" << i << "): ";
    if (e.value)
      os << rat_to_string(*e.value) << " [" << kind_name(e.kind) << "]";
    else
      os << "[ABSENT]";
    os << "\n";
  }
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the exit code.

int cmd_newton(const Options& opt, std::ostream& out) {
  MonomialIdeal ideal = single_ideal(opt);
  NewtonPolyhedron p = newton_polyhedron(ideal);
  Json doc;
  doc["command"] = "newton";
  doc["ideal"] = json_ideal(ideal);
  doc["newton"] = json_newton(p);
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "ideal: " << ideal.to_string() << "\n";
    os << "vertices:";
    for (const auto& v : p.vertices) os << " " << vec_to_string(v);
    os << "\n";
    for (const auto& f : p.facets)
      os << "facet: normal=" << vec_to_string(f.normal) << " offset=" << rat_to_string(f.offset)
         << "\n";
    os << "axis_intercepts:";
    for (const auto& t : p.axis_intercepts) os << " " << (t ? rat_to_string(*t) : "absent");
    os << "\n";
    os << "convenient: " << (p.convenient() ? "true" : "false") << "\n";
    for (const auto& f : p.compact_faces) {
      os << "face dim=" << f.dim << ":";
      for (const auto& v : f.vertices) os << " " << vec_to_string(v);
      os << "\n";
    }
  });
  return 0;
}

int cmd_closure(const Options& opt, std::ostream& out) {
  MonomialIdeal ideal = single_ideal(opt);
  MonomialIdeal closed = closure_generators(ideal);
  Json doc;
  doc["command"] = "closure";
  doc["ideal"] = json_ideal(ideal);
  doc["closure"] = json_ideal(closed);
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "ideal: " << ideal.to_string() << "\n";
    os << "closure: " << closed.to_string() << "\n";
  });
  return 0;
}

int cmd_mult(const Options& opt, std::ostream& out) {
  MonomialIdeal ideal = single_ideal(opt);
  Int e = samuel_multiplicity(ideal);
  Json doc;
  doc["command"] = "mult";
  doc["ideal"] = json_ideal(ideal);
  doc["e"] = int_to_string(e);
  emit(out, opt, doc, [&](std::ostream& os) { os << "e: " << e << "\n"; });
  return 0;
}

int cmd_mixed(const Options& opt, std::ostream& out) {
  auto [i, j] = ideal_pair(opt);
  MultiplicityTable t = mixed_sequence(i, j, opt.cross_check);
  Json doc;
  doc["command"] = "mixed";
  doc["ideal_I"] = json_ideal(i);
  doc["ideal_J"] = json_ideal(j);
  doc["multiplicities"] = json_mult(t);
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "e_I: " << t.e_i << "\n";
    os << "e_J: " << t.e_j << "\n";
    os << "mixed:";
    for (const auto& e : t.mixed) os << " " << e;
    os << "\n";
  });
  return 0;
}

int cmd_sigma(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.input_path.empty()) throw_invalid("sigma needs --input with --tuple names");
  if (opt.tuple.empty()) throw_invalid("sigma needs --tuple with ideal names");
  IdealSpec spec = load_input(opt);
  std::vector<MonomialIdeal> ideals;
  for (const auto& name : opt.tuple) {
    auto it = spec.ideals.find(name);
    if (it == spec.ideals.end()) throw_invalid("no ideal named '" + name + "' in input");
    ideals.push_back(it->second);
  }
  auto s = rees_sigma(ideals, resolve_sigma_cap(opt));
  if (!s) {
    err << "sigma did not stabilize below the cap (possibly infinite)\n";
    return 3;
  }
  Json doc;
  doc["command"] = "sigma";
  doc["sigma"] = int_to_string(*s);
  emit(out, opt, doc, [&](std::ostream& os) { os << "sigma: " << *s << "\n"; });
  return 0;
}

int cmd_phi(const Options& opt, std::ostream& out) {
  if (opt.inline_j.empty() && opt.input_path.empty())
    throw_invalid("phi needs --ideal-J (or --input with --name)");
  MonomialIdeal j = [&] {
    if (!opt.inline_j.empty()) return inline_ideal(opt.inline_j, opt.vars);
    Options o2 = opt;
    o2.inline_ideal.clear();
    return single_ideal(o2);
  }();
  if (opt.point.empty()) throw_invalid("phi needs --point");
  QVec k;
  for (const auto& part : split_commas(opt.point)) k.push_back(rat_from_string(part));
  if (static_cast<int>(k.size()) != j.num_vars())
    throw_invalid("point arity does not match the ideal");
  FiltrationMap f = build_filtration(j);
  Rat value = phi(f, k);
  Json doc;
  doc["command"] = "phi";
  doc["ideal_J"] = json_ideal(j);
  doc["point"] = json_qvec(k);
  doc["M"] = int_to_string(f.level);
  doc["value"] = rat_to_string(value);
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "M: " << f.level << "\n";
    os << "phi: " << rat_to_string(value) << "\n";
  });
  return 0;
}

int cmd_loja(const Options& opt, std::ostream& out, std::ostream& err) {
  auto [i, j] = ideal_pair(opt);
  LojaReport rep = loja_sequence(i, j);
  bool has_absent = std::any_of(rep.entries.begin(), rep.entries.end(),
                                [](const LojaEntry& e) { return e.kind == EntryKind::Absent; });
  Json doc;
  doc["command"] = "loja";
  doc["ideal_I"] = json_ideal(i);
  doc["ideal_J"] = json_ideal(j);
  doc["loja"] = json_loja(rep);
  if (has_absent && !opt.bounds_ok) {
    err << "exact values unavailable for i<n (no inclusion, J not diagonal); "
           "pass --bounds-ok to emit the partial report\n";
    return 2;
  }
  emit(out, opt, doc, [&](std::ostream& os) { os << loja_text_lines(rep); });
  return 0;
}

int cmd_kideals(const Options& opt, std::ostream& out) {
  auto [i, j] = ideal_pair(opt);
  auto ks = build_K_ideals(i, j);
  FiltrationMap f = build_filtration(j);
  Int c = c_invariant(i, j);
  Json doc;
  doc["command"] = "kideals";
  doc["ideal_I"] = json_ideal(i);
  doc["ideal_J"] = json_ideal(j);
  doc["c"] = int_to_string(c);
  doc["scale"] = int_to_string(c * f.level);
  Json arr = Json::array();
  for (const auto& k : ks) arr.push_back(json_ideal(k));
  doc["K"] = arr;
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "c: " << c << "\n";
    os << "scale: " << c * f.level << "\n";
    for (std::size_t idx = 0; idx < ks.size(); ++idx)
      os << "K" << idx + 1 << ": " << ks[idx].to_string() << "\n";
  });
  return 0;
}

int cmd_hickel(const Options& opt, std::ostream& out) {
  auto [i, j] = ideal_pair(opt);
  HickelReport rep = hickel_report(i, j, opt.cross_check);
  Json doc;
  doc["command"] = "hickel";
  doc["ideal_I"] = json_ideal(i);
  doc["ideal_J"] = json_ideal(j);
  doc["hickel"] = json_hickel(rep);
  emit(out, opt, doc, [&](std::ostream& os) {
    os << "e(I)/e(J): " << rat_to_string(rep.ratio_e) << "\n";
    os << "product_L: " << (rep.product_l ? rat_to_string(*rep.product_l) : "absent") << "\n";
    os << "product_a: " << rat_to_string(rep.product_a) << "\n";
    os << "is_hickel: " << verdict_name(rep.is_hickel) << "\n";
    if (rep.gap) os << "gap: " << rat_to_string(*rep.gap) << "\n";
  });
  return 0;
}

Json build_report(const MonomialIdeal& i, const MonomialIdeal& j, bool cross_check) {
  HickelReport rep = hickel_report(i, j, cross_check);
  InequalitySuite suite = inequality_suite(i, j, /*cross_check=*/false);
  Json doc;
  doc["schema_version"] = "lojax-report/1";
  Json input;
  Json vars = Json::array();
  for (const auto& v : i.var_names()) vars.push_back(v);
  input["variables"] = vars;
  Json ideals;
  ideals["I"] = json_ideal(i);
  ideals["J"] = json_ideal(j);
  input["ideals"] = ideals;
  doc["input"] = input;
  Json newton;
  newton["I"] = json_newton(newton_polyhedron(i));
  newton["J"] = json_newton(newton_polyhedron(j));
  doc["newton"] = newton;
  FiltrationMap f = build_filtration(j);
  Json filt;
  filt["M"] = int_to_string(f.level);
  Json pieces = Json::array();
  for (const auto& piece : f.pieces) {
    Json jp;
    jp["normal"] = json_zvec(piece.normal);
    jp["ell"] = int_to_string(piece.ell);
    jp["multiplier"] = int_to_string(piece.multiplier);
    pieces.push_back(jp);
  }
  filt["pieces"] = pieces;
  filt["diagonal"] = f.is_diagonal();
  doc["filtration"] = filt;
  doc["multiplicities"] = json_mult(rep.multiplicities);
  doc["loja"] = json_loja(rep.loja);
  doc["hickel"] = json_hickel(rep);
  Json checks = Json::array();
  for (const auto& c : suite.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["applicable"] = c.applicable;
    jc["holds"] = c.holds;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    checks.push_back(jc);
  }
  doc["inequalities"] = checks;
  doc["warnings"] = rep.loja.notes;
  return doc;
}

int cmd_report(const Options& opt, std::ostream& out) {
  auto [i, j] = ideal_pair(opt);
  Json doc = build_report(i, j, opt.cross_check);
  emit(out, opt, doc, [&](std::ostream& os) {
    // The full report is a JSON artifact; text mode prints the same bytes.
    os << doc.dump(2) << "\n";
  });
  return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input_path, "JSON input file");
  cmd->add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--vars", opt.vars, "Comma-separated variable names for inline ideals");
}

void add_single(CLI::App* cmd, Options& opt) {
  add_common(cmd, opt);
  cmd->add_option("--ideal", opt.inline_ideal, "Inline comma-separated monomial generators");
  cmd->add_option("--name", opt.name, "Ideal name inside --input");
}

void add_pair(CLI::App* cmd, Options& opt) {
  add_common(cmd, opt);
  cmd->add_option("--ideal-I", opt.inline_i, "Inline generators for I");
  cmd->add_option("--ideal-J", opt.inline_j, "Inline generators for J");
  cmd->add_option("--pair", [&opt](const std::vector<std::string>& v) {
        if (v.size() != 2) return false;
        opt.name_i = v[0];
        opt.name_j = v[1];
        return true;
      },
      "Names of I and J inside --input")
      ->expected(2);
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;
  Options opt;

  CLI::App app{"Exact polyhedral invariants of monomial ideal pairs"};
  app.require_subcommand(1);

  auto* newton = app.add_subcommand("newton", "Newton polyhedron dump");
  add_single(newton, opt);
  auto* closure = app.add_subcommand("closure", "Integral closure generators");
  add_single(closure, opt);
  auto* mult = app.add_subcommand("mult", "Samuel multiplicity");
  add_single(mult, opt);
  auto* mixed = app.add_subcommand("mixed", "Mixed multiplicity sequence e_i(I, J)");
  add_pair(mixed, opt);
  mixed->add_flag("--cross-check", opt.cross_check, "Verify with the polynomial-fit path");
  auto* sigma = app.add_subcommand("sigma", "Stabilized Rees multiplicity of a tuple");
  add_common(sigma, opt);
  sigma->add_option("--tuple", opt.tuple, "Ideal names inside --input")->expected(-1);
  sigma->add_option("--cap", opt.sigma_cap, "Stabilization cap (default 64 or LOJAX_SIGMA_CAP)");
  auto* phi_cmd = app.add_subcommand("phi", "Filtration value at a point");
  add_common(phi_cmd, opt);
  phi_cmd->add_option("--ideal-J", opt.inline_j, "Inline generators for J");
  phi_cmd->add_option("--name", opt.name, "Ideal name inside --input");
  phi_cmd->add_option("--point", opt.point, "Comma-separated rational coordinates");
  auto* loja = app.add_subcommand("loja", "Lojasiewicz exponent sequence");
  add_pair(loja, opt);
  loja->add_flag("--bounds-ok", opt.bounds_ok, "Accept reports with absent entries");
  auto* kideals = app.add_subcommand("kideals", "Level-set ideals K_1..K_n");
  add_pair(kideals, opt);
  auto* hickel = app.add_subcommand("hickel", "Hickel equality report");
  add_pair(hickel, opt);
  hickel->add_flag("--cross-check", opt.cross_check, "Verify with the polynomial-fit path");
  auto* report = app.add_subcommand("report", "Full analysis report (JSON)");
  add_pair(report, opt);
  report->add_flag("--cross-check", opt.cross_check, "Verify with the polynomial-fit path");

  std::vector<const char*> argv;
  argv.push_back("lojax");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 1;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    int code = 0;
    if (newton->parsed()) code = cmd_newton(opt, out);
    else if (closure->parsed()) code = cmd_closure(opt, out);
    else if (mult->parsed()) code = cmd_mult(opt, out);
    else if (mixed->parsed()) code = cmd_mixed(opt, out);
    else if (sigma->parsed()) code = cmd_sigma(opt, out, err);
    else if (phi_cmd->parsed()) code = cmd_phi(opt, out);
    else if (loja->parsed()) code = cmd_loja(opt, out, err);
    else if (kideals->parsed()) code = cmd_kideals(opt, out);
    else if (hickel->parsed()) code = cmd_hickel(opt, out);
    else if (report->parsed()) code = cmd_report(opt, out);
    result.exit_code = code;
  } catch (const Error& e) {
    switch (e.code()) {
      case Error::Code::InvalidInput: result.exit_code = 1; break;
      case Error::Code::NotFiniteColength:
      case Error::Code::NotApplicable: result.exit_code = 2; break;
      case Error::Code::LimitExceeded: result.exit_code = 3; break;
      case Error::Code::Internal: result.exit_code = 70; break;
    }
    err << e.what() << "\n";
  } catch (const std::exception& e) {
    result.exit_code = 70;
    err << "internal error: " << e.what() << "\n";
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace lojax::cli
