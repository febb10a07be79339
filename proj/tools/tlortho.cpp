// Command-line front end for the tlortho library.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 usage error.

#include "tlortho/tlortho.hpp"
#include "tlortho/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tlortho;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = -1;
  std::string shape;
  std::string kind = "omega";
  std::string which = "P";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 20240601;
  std::string delta_sign = "minus";
  std::string specialize;
  int gen = 0;
  std::string suite;
  std::string from = "factor";
  std::string to = "walk";
  std::string value;
  int k = 0;
};

Rational parse_rational(const std::string &flag, const std::string &text) {
  try {
    Rational q(text);
    if (q.get_den() == 0)
      throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::exception &) {
    throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
  }
}

std::optional<Rational> specialize_point(const Options &o) {
  if (o.specialize.empty())
    return std::nullopt;
  Rational v0 = parse_rational("--specialize", o.specialize);
  if (v0 == 0)
    throw UsageError("--specialize: v0 must be nonzero");
  return v0;
}

Shape parse_shape(const Options &o) {
  auto comma = o.shape.find(',');
  if (comma == std::string::npos)
    throw UsageError("--shape: expected L1,L2, got '" + o.shape + "'");
  try {
    Shape s(std::stoi(o.shape.substr(0, comma)), std::stoi(o.shape.substr(comma + 1)));
    if (o.n >= 0 && s.n() != o.n)
      throw UsageError("--shape: " + s.to_string() + " is not a shape of n = " + std::to_string(o.n));
    return s;
  } catch (const UsageError &) {
    throw;
  } catch (const std::exception &e) {
    throw UsageError(std::string("--shape: ") + e.what());
  }
}

/// Shapes selected by --shape, or all shapes of --n.
std::vector<Shape> selected_shapes(const Options &o) {
  if (!o.shape.empty())
    return {parse_shape(o)};
  if (o.n < 0)
    throw UsageError("--n or --shape is required");
  return shapes_of(o.n);
}

DeltaSign delta_sign(const Options &o) {
  if (o.delta_sign == "minus")
    return DeltaSign::Minus;
  if (o.delta_sign == "plus")
    return DeltaSign::Plus;
  throw UsageError("--delta-sign: expected plus or minus");
}

std::string csv_quote(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string r = "\"";
  for (char c : s)
    r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string join(const std::vector<int> &v, const char *sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

/// Output sink: JSON document or CSV rows.
class Output {
public:
  explicit Output(const Options &o) : csv_(o.format == "csv"), path_(o.out) {}

  bool csv() const { return csv_; }
  void json(const Json &j) { text_ << j.dump(2) << '\n'; }
  void row(const std::vector<std::string> &cells) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      text_ << (k ? "," : "") << csv_quote(cells[k]);
    text_ << '\n';
  }

  void flush() {
    if (path_.empty()) {
      std::cout << text_.str();
      return;
    }
    std::ofstream f(path_);
    if (!f)
      throw UsageError("--out: cannot open '" + path_ + "' for writing");
    f << text_.str();
  }

private:
  bool csv_;
  std::string path_;
  std::ostringstream text_;
};

/// Calls f.template operator()<K>() with K = Scalar, or a point field at v0.
template <class F> void with_field(const std::optional<Rational> &v0, F &&f) {
  if (!v0) {
    f.template operator()<Scalar>();
  } else {
    ScopedPoint at(*v0);
    f.template operator()<AtRuntime>();
  }
}

// ---------------------------------------------------------------------------

int cmd_qint(const Options &o, Output &out) {
  auto v0 = specialize_point(o);
  LaurentPoly q = quantum_int(o.k);
  if (v0) {
    Rational x = q.evaluate(*v0);
    if (out.csv()) {
      out.row({"k", "v0", "value"});
      out.row({std::to_string(o.k), v0->get_str(), x.get_str()});
    } else {
      out.json(rational_to_json(x));
    }
  } else if (out.csv()) {
    out.row({"exponent", "coefficient"});
    auto t = q.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      out.row({std::to_string(it->first), it->second.get_str()});
  } else {
    out.json(to_json(Scalar(q)));
  }
  return 0;
}

int cmd_basis(const Options &o, Output &out) {
  BasisKind kind;
  if (o.kind == "omega")
    kind = BasisKind::Omega;
  else if (o.kind == "nu")
    kind = BasisKind::Nu;
  else
    throw UsageError("--kind: expected omega or nu");
  const auto shapes = selected_shapes(o);
  with_field(specialize_point(o), [&]<CoefficientField K>() {
    Json all = Json::array();
    if (out.csv())
      out.row({"shape", "index", "signs", "coeff"});
    for (const auto &s : shapes) {
      auto b = MaximalBasis<K>::build(s, kind);
      Json vecs = Json::array();
      for (std::size_t k = 0; k < b.index.size(); ++k) {
        if (out.csv())
          for (const auto &[m, c] : b.vectors[k].terms())
            out.row({s.to_string(), b.index[k].to_string(), join(mask_signs(m, s.n())), c.to_string()});
        vecs.push_back(Json{{"index", to_json(b.index[k])}, {"vector", to_json(b.vectors[k])}});
      }
      all.push_back(Json{{"shape", to_json(s)}, {"kind", to_string(kind)}, {"vectors", vecs}});
    }
    if (!out.csv())
      out.json(all.size() == 1 ? all[0] : all);
  });
  return 0;
}

int cmd_transition(const Options &o, Output &out) {
  if (o.which != "P" && o.which != "Pprime" && o.which != "pipp")
    throw UsageError("--which: expected P, Pprime or pipp");
  const auto shapes = selected_shapes(o);
  Json all = Json::array();
  if (o.which == "pipp") {
    if (!o.specialize.empty())
      throw UsageError("--specialize: pipp entries are integer polynomials; nothing to specialize");
    if (out.csv())
      out.row({"shape", "alpha", "beta", "polynomial"});
    for (const auto &s : shapes) {
      auto idx = enumerate_one_factors(s);
      Json entries = Json::array();
      for (const auto &a : idx)
        for (const auto &b : idx) {
          auto p = pi_double_prime(a, b);
          if (p.is_zero())
            continue;
          if (out.csv())
            out.row({s.to_string(), a.to_string(), b.to_string(), p.to_string()});
          entries.push_back(Json{{"alpha", to_json(a)}, {"beta", to_json(b)}, {"poly", to_json(p)},
                                 {"text", p.to_string()}});
        }
      all.push_back(Json{{"shape", to_json(s)}, {"kind", "pipp"}, {"entries", entries}});
    }
  } else {
    with_field(specialize_point(o), [&]<CoefficientField K>() {
      if (out.csv())
        out.row({"shape", "alpha", "beta", "value"});
      for (const auto &s : shapes) {
        auto t = o.which == "P" ? matrix_P<K>(s) : matrix_Pprime<K>(s);
        if (out.csv())
          for (std::size_t r = 0; r < t.index.size(); ++r)
            for (std::size_t c = 0; c < t.index.size(); ++c)
              if (!t.entries(r, c).is_zero())
                out.row({s.to_string(), t.index[r].to_string(), t.index[c].to_string(), t.entries(r, c).to_string()});
        all.push_back(to_json(t));
      }
    });
  }
  if (!out.csv())
    out.json(all.size() == 1 ? all[0] : all);
  return 0;
}

int cmd_tl_matrix(const Options &o, Output &out) {
  if (o.n < 1 || o.n > 12)
    throw UsageError("--n: expected 1 <= n <= 12");
  const DeltaSign sign = delta_sign(o);
  std::vector<int> gens;
  if (o.gen == 0)
    for (int i = 1; i < o.n; ++i)
      gens.push_back(i);
  else if (o.gen < 1 || o.gen >= o.n)
    throw UsageError("--gen: expected 1 <= i < n");
  else
    gens.push_back(o.gen);
  with_field(specialize_point(o), [&]<CoefficientField K>() {
    Json all = Json::array();
    if (out.csv())
      out.row({"gen", "row", "col", "value"});
    for (int i : gens) {
      auto m = ei_matrix<K>(o.n, i, sign);
      if (out.csv()) {
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
              out.row({std::to_string(i), std::to_string(r), std::to_string(c), m(r, c).to_string()});
      } else {
        Json j = to_sparse_json(m);
        j["n"] = o.n;
        j["gen"] = i;
        j["delta_sign"] = to_string(sign);
        j["basis_order"] = "lex on signs, +1 before -1";
        all.push_back(j);
      }
    }
    if (!out.csv())
      out.json(all.size() == 1 ? all[0] : all);
  });
  return 0;
}

int cmd_verify(const Options &o, Output &out) {
  if (o.suite.empty())
    throw UsageError("--suite is required");
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto &s : suite_list())
      names.push_back(s.name);
  } else {
    suite_default_n(o.suite); // validates the name
    names.push_back(o.suite);
  }
  auto v0 = specialize_point(o);
  std::optional<int> n = o.n >= 0 ? std::optional<int>(o.n) : std::nullopt;
  bool ok = true;
  Json all = Json::array();
  if (out.csv())
    out.row({"suite", "n", "checks", "failures", "passed", "wall_time_ms"});
  for (const auto &name : names) {
    auto r = run_suite(name, n, o.seed, v0);
    ok = ok && r.passed();
    if (out.csv())
      out.row({r.suite, std::to_string(r.n), std::to_string(r.checks), std::to_string(r.failures.size()),
               r.passed() ? "true" : "false", std::to_string(r.wall_time_ms)});
    else
      all.push_back(r.to_json());
  }
  if (!out.csv())
    out.json(all.size() == 1 ? all[0] : all);
  return ok ? 0 : 1;
}

IndexKind parse_kind(const std::string &flag, const std::string &s) {
  if (s == "factor")
    return IndexKind::Factor;
  if (s == "walk")
    return IndexKind::Walk;
  if (s == "link")
    return IndexKind::Link;
  if (s == "tableau")
    return IndexKind::Tableau;
  throw UsageError(flag + ": expected factor, walk, link or tableau");
}

std::vector<int> parse_ints(const std::string &s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty())
      v.push_back(std::stoi(tok));
  return v;
}

/// factor "1,1,-1"; walk "VVD"; link "2,1,0"; tableau "1,2,4/3".
IndexObject parse_index(IndexKind k, const std::string &s) {
  switch (k) {
  case IndexKind::Factor:
    return OneFactor::parse(s);
  case IndexKind::Walk:
    return BratteliWalk::parse(s);
  case IndexKind::Link:
    return LinkDiagram(parse_ints(s));
  case IndexKind::Tableau: {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return StandardTableau(parse_ints(s), {});
    return StandardTableau(parse_ints(s.substr(0, slash)), parse_ints(s.substr(slash + 1)));
  }
  }
  throw std::logic_error("unreachable");
}

std::string index_text(const IndexObject &x) {
  return std::visit(
      [](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OneFactor> || std::is_same_v<T, BratteliWalk>)
          return v.to_string();
        else if constexpr (std::is_same_v<T, LinkDiagram>)
          return join(v.partners(), ",");
        else
          return join(v.top(), ",") + "/" + join(v.bottom(), ",");
      },
      x);
}

int cmd_bijection(const Options &o, Output &out) {
  const IndexKind kinds[] = {IndexKind::Factor, IndexKind::Walk, IndexKind::Link, IndexKind::Tableau};
  if (!o.value.empty()) {
    IndexObject x;
    try {
      x = parse_index(parse_kind("--from", o.from), o.value);
    } catch (const UsageError &) {
      throw;
    } catch (const std::exception &e) {
      throw UsageError(std::string("--value: ") + e.what());
    }
    IndexObject y = convert(x, parse_kind("--to", o.to));
    if (out.csv()) {
      out.row({o.from, o.to});
      out.row({index_text(x), index_text(y)});
    } else {
      out.json(Json{{"from", o.from}, {"to", o.to}, {"input", to_json(x)}, {"output", to_json(y)}});
    }
    return 0;
  }
  const auto shapes = selected_shapes(o);
  Json all = Json::array();
  if (out.csv())
    out.row({"shape", "factor", "walk", "link", "tableau"});
  for (const auto &s : shapes)
    for (const auto &a : enumerate_one_factors(s)) {
      std::vector<std::string> cells{s.to_string()};
      Json j{{"shape", to_json(s)}};
      for (auto k : kinds) {
        auto img = convert(a, k);
        cells.push_back(index_text(img));
        static const char *names[] = {"factor", "walk", "link", "tableau"};
        j[names[static_cast<int>(k)]] = to_json(img);
      }
      if (out.csv())
        out.row(cells);
      all.push_back(j);
    }
  if (!out.csv())
    out.json(all);
  return 0;
}

std::string suite_help() {
  std::string s = "Suites (default --n in brackets):\n";
  for (const auto &x : suite_list())
    s += "  " + x.name + " [" + std::to_string(x.default_n) + "]: " + x.description + "\n";
  s += "  all: every suite at its default n\n";
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Orthogonal maximal vectors and Temperley-Lieb actions on tensor space, in exact arithmetic."};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write to this file instead of stdout");
  };
  auto point = [&](CLI::App *c) {
    c->add_option("--specialize", o.specialize, "evaluate at v = V0, a rational p/q");
  };

  auto *qint = app.add_subcommand("qint", "balanced quantum integer [k]");
  qint->add_option("k", o.k, "the integer k")->required();
  common(qint);
  point(qint);

  auto *basis = app.add_subcommand("basis", "the omega or nu basis of the maximal vectors of a shape");
  basis->add_option("--n", o.n, "tensor length");
  basis->add_option("--shape", o.shape, "two-row shape L1,L2 (default: all shapes of n)");
  basis->add_option("--kind", o.kind, "omega or nu");
  common(basis);
  point(basis);

  auto *transition = app.add_subcommand("transition", "transition matrices between the nu and omega bases");
  transition->add_option("--n", o.n, "tensor length");
  transition->add_option("--shape", o.shape, "two-row shape L1,L2 (default: all shapes of n)");
  transition->add_option("--which", o.which, "P (nu in omega), Pprime (omega in nu) or pipp (pairing polynomials)");
  common(transition);
  point(transition);

  auto *tl = app.add_subcommand("tl-matrix", "matrix of a Temperley-Lieb generator on V^n");
  tl->add_option("--n", o.n, "tensor length")->required();
  tl->add_option("--gen", o.gen, "generator index i in 1..n-1 (default: all)");
  tl->add_option("--delta-sign", o.delta_sign, "minus (loop value -(v+v^-1), the default) or plus");
  common(tl);
  point(tl);

  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name or 'all'")->required();
  verify->add_option("--n", o.n, "size bound (default per suite)");
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  common(verify);
  point(verify);
  verify->footer(suite_help());

  auto *bij = app.add_subcommand("bijection", "convert between 1-factors, walks, link diagrams and tableaux");
  bij->add_option("--n", o.n, "list every index object of this length");
  bij->add_option("--shape", o.shape, "restrict the listing to one shape");
  bij->add_option("--from", o.from, "factor, walk, link or tableau");
  bij->add_option("--to", o.to, "factor, walk, link or tableau");
  bij->add_option("--value", o.value, "object to convert: factor 1,1,-1; walk VVD; link 2,1,0; tableau 1,2/3");
  common(bij);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    Output out(o);
    int rc = 0;
    if (*qint)
      rc = cmd_qint(o, out);
    else if (*basis)
      rc = cmd_basis(o, out);
    else if (*transition)
      rc = cmd_transition(o, out);
    else if (*tl)
      rc = cmd_tl_matrix(o, out);
    else if (*verify)
      rc = cmd_verify(o, out);
    else if (*bij)
      rc = cmd_bijection(o, out);
    out.flush();
    return rc;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
