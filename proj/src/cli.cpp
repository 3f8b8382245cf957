#include "hhgr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhgr/beta.hpp"
#include "hhgr/errors.hpp"
#include "hhgr/hochschild.hpp"
#include "hhgr/lie.hpp"
#include "hhgr/outer.hpp"
#include "hhgr/symfunc.hpp"

namespace hhgr::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Reply {
  Json json;
  std::string text;
  int status = kExitOk;
};

Json partition_json(const Partition& p) { return Json(p.parts()); }

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(q.get_str());
}

Json class_json(const GrothendieckClass& c) {
  Json arr = Json::array();
  for (const auto& [p, m] : c.terms()) {
    Json t{{"p", partition_json(p)}, {"m", m}};
    if (m < 0) t["virtual"] = true;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json schur_json(const SchurVector& v) {
  Json arr = Json::array();
  for (const auto& [p, c] : v.terms()) {
    Json t{{"p", partition_json(p)}, {"m", rational_json(c)}};
    if (sgn(c) < 0) t["virtual"] = true;
    arr.push_back(std::move(t));
  }
  return arr;
}

std::string class_text(const GrothendieckClass& c, const std::string& indent = "") {
  if (c.empty()) return indent + "0\n";
  std::size_t width = 1;
  for (const auto& [p, m] : c.terms()) width = std::max(width, to_string(p).size());
  std::ostringstream os;
  for (const auto& [p, m] : c.terms())
    os << indent << std::left << std::setw(static_cast<int>(width)) << to_string(p) << "  " << m << '\n';
  return os.str();
}

std::string schur_text(const SchurVector& v) {
  if (v.empty()) return "0\n";
  std::size_t width = 1;
  for (const auto& [p, c] : v.terms()) width = std::max(width, to_string(p).size());
  std::ostringstream os;
  for (const auto& [p, c] : v.terms())
    os << std::left << std::setw(static_cast<int>(width)) << to_string(p) << "  " << c.get_str() << '\n';
  return os.str();
}

std::string coefficient_kind(CoefficientKind k) {
  switch (k) {
    case CoefficientKind::InjGamma: return "InjGamma";
    case CoefficientKind::InjFin: return "InjFin";
    case CoefficientKind::DualNumbers: return "DualNumbers";
  }
  return "InjGamma";
}

Reply hh_reply(const HHTable& t) {
  Reply r;
  Json coeff{{"kind", coefficient_kind(t.coefficient.kind)}};
  if (t.coefficient.kind == CoefficientKind::InjFin)
    coeff["lambda"] = partition_json(t.coefficient.lambda);
  else
    coeff["deg"] = t.coefficient.degree;
  r.json["coefficient"] = coeff;
  r.json["r"] = t.rank;

  std::ostringstream os;
  os << coefficient_kind(t.coefficient.kind);
  if (t.coefficient.kind == CoefficientKind::InjFin)
    os << " lambda=" << to_string(t.coefficient.lambda);
  else
    os << " d=" << t.coefficient.degree;
  os << " r=" << t.rank << '\n';

  Json rows = Json::array();
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    const auto& [deg, row] = *it;
    Json jr{{"deg", deg}, {"dim", row.dimension}};
    os << "deg " << deg << "  dim " << row.dimension << '\n';
    if (row.factors) {
      jr["factors"] = class_json(*row.factors);
      os << class_text(*row.factors, "  ");
    }
    rows.push_back(std::move(jr));
  }
  r.json["rows"] = std::move(rows);
  if (t.unsupported) {
    const std::string warning = "composition factors undetermined for nu = " +
                                to_string(t.coefficient.lambda.conjugate()) + "; Euler class only";
    r.json["warning"] = warning;
    r.json["euler"] = class_json(*t.euler);
    os << "warning: " << warning << '\n' << "euler\n" << class_text(*t.euler, "  ");
    r.status = kExitUnsupported;
  }
  r.text = os.str();
  return r;
}

Reply outer_reply(const OuterReport& rep, bool with_omega) {
  Reply r;
  r.json["nu"] = partition_json(rep.nu);
  if (with_omega) r.json["method"] = std::string(to_string(rep.method));
  r.json["beta"] = class_json(rep.beta);
  r.json["target"] = class_json(rep.target);
  r.json["euler"] = class_json(rep.euler_difference);
  std::ostringstream os;
  os << "nu " << to_string(rep.nu) << '\n';
  if (with_omega) os << "method " << to_string(rep.method) << '\n';
  os << "beta\n" << class_text(rep.beta, "  ") << "target\n" << class_text(rep.target, "  ")
     << "euler\n" << class_text(rep.euler_difference, "  ");
  if (with_omega && rep.resolved()) {
    r.json["omega"] = class_json(*rep.omega);
    r.json["coker"] = class_json(*rep.coker);
    os << "omega\n" << class_text(*rep.omega, "  ") << "coker\n" << class_text(*rep.coker, "  ");
  }
  r.text = os.str();
  return r;
}

GrothendieckClass class_from_terms(const Json& arr) {
  if (!arr.is_array()) throw ParseError("class terms must be an array");
  GrothendieckClass c;
  for (const Json& t : arr) {
    if (!t.is_object() || !t.contains("p") || !t.contains("m")) throw ParseError("class term needs \"p\" and \"m\"");
    c.add(Partition::from_padded(t.at("p").get<std::vector<int>>()), t.at("m").get<std::int64_t>());
  }
  return c;
}

/// Accepts a bare term array, or an object carrying "factors", "mult" or
/// bigraded "rows" (as emitted by `beta`, `lie` and `psi`).
std::int64_t dims_of_file(const std::string& path, std::uint64_t r) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open class file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("class file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.is_array()) return eval_dimension(class_from_terms(doc), r);
    if (doc.is_object() && doc.contains("factors")) return eval_dimension(class_from_terms(doc["factors"]), r);
    if (doc.is_object() && doc.contains("mult")) return eval_dimension(class_from_terms(doc["mult"]), r);
    if (doc.is_object() && doc.contains("rows")) {
      BigradedClass b;
      for (const Json& row : doc["rows"]) {
        const Partition nu = Partition::from_padded(row.at("nu").get<std::vector<int>>());
        const GrothendieckClass factors = class_from_terms(row.at("factors"));
        for (const auto& [rho, m] : factors.terms()) b.add(rho, nu, m);
      }
      return eval_dimension(b, r);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed class file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed class file: ") + e.what());
  }
  throw ParseError("class file must be a term array or an object with factors, mult or rows");
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ": '" + s + "'");
  }
  if (used != s.size() || v < 0) throw ParseError(std::string("expected a natural number for ") + what + ": '" + s + "'");
  return v;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial-functor and Hochschild computations on free groups", "hhgr"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  unsigned threads = 1;
  unsigned bound = kDefaultDegreeBound;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "Worker cap")->check(CLI::Range(1u, 256u));
  app.add_option("--bound", bound, "Degree bound");

  std::string a1, a2, a3;
  bool outer = false;
  auto sub = [&](const char* name, const char* help, std::vector<std::pair<const char*, std::string*>> pos) {
    CLI::App* s = app.add_subcommand(name, help);
    for (auto& [pname, target] : pos) s->add_option(pname, *target)->required();
    return s;
  };
  CLI::App* c_chartable = sub("chartable", "Character table of S_N", {{"N", &a1}});
  CLI::App* c_lr = sub("lr", "Littlewood-Richardson expansion of s_L s_M", {{"LAMBDA", &a1}, {"MU", &a2}});
  CLI::App* c_prod = sub("prod", "s_L s_M through power sums", {{"LAMBDA", &a1}, {"MU", &a2}});
  CLI::App* c_pleth = sub("plethysm", "s_L o s_M", {{"LAMBDA", &a1}, {"MU", &a2}});
  CLI::App* c_lie = sub("lie", "Decomposition of Lie(N)", {{"N", &a1}});
  CLI::App* c_beta = sub("beta", "Composition factors of beta S_NU", {{"NU", &a1}});
  CLI::App* c_psi = sub("psi", "Bigraded composition factors in arity D", {{"D", &a1}});
  CLI::App* c_omega = sub("omega-beta", "omega beta S_NU and the cokernel", {{"NU", &a1}});
  CLI::App* c_adbar = sub("adbar", "Euler data of the adjoint coaction", {{"NU", &a1}});
  CLI::App* c_ext1 = sub("ext1", "dim Ext^1(alpha S_RHO, alpha S_NU)", {{"RHO", &a1}, {"NU", &a2}});
  c_ext1->add_flag("--outer", outer, "Among outer functors");
  CLI::App* c_hhg = sub("hh-inj-gamma", "HH with Inj^Gamma(D,-) coefficients", {{"D", &a1}, {"R", &a2}});
  CLI::App* c_hhf = sub("hh-inj-fin", "HH with Inj^Fin_LAMBDA coefficients", {{"LAMBDA", &a1}, {"R", &a2}});
  CLI::App* c_hhd = sub("hh-dual", "HH of the dual numbers", {{"R", &a1}, {"DMAX", &a2}});
  CLI::App* c_tor = sub("tor", "Tor^Gamma dimension", {{"M", &a1}, {"N", &a2}});
  CLI::App* c_dims = sub("dims", "Evaluate a class file at rank R", {{"CLASSFILE", &a1}, {"R", &a3}});

  bool json_requested = false;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i] == "--format=json" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json"))
      json_requested = true;
  auto fail = [&](bool json, const std::string& kind, const std::string& message, int status, Json extra = {}) {
    if (json) {
      Json j = error_json(kind, message);
      if (!extra.is_null())
        for (auto& [k, v] : extra.items()) j[k] = v;
      out << j.dump() << '\n';
    } else {
      err << "error: " << message << '\n';
    }
    return status;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(json_requested, "ParseError", e.what(), kExitParse);
  }
  const bool json = format == "json";
  ComputeOptions opts;
  opts.degree_bound = bound;
  opts.threads = threads;

  Reply reply;
  try {
    if (c_chartable->parsed()) {
      const int n = parse_int(a1, "N");
      const CharacterTable& t = character_table(n);
      Json classes = Json::array();
      for (const Partition& mu : t.partitions) classes.push_back(partition_json(mu));
      Json rows = Json::array();
      std::ostringstream os;
      os << "S_" << n << '\n';
      std::size_t width = 1;
      for (const Partition& p : t.partitions) width = std::max(width, to_string(p).size());
      os << std::left << std::setw(static_cast<int>(width)) << "" << " ";
      for (const Partition& mu : t.partitions) os << ' ' << std::right << std::setw(static_cast<int>(width)) << to_string(mu);
      os << '\n';
      for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        rows.push_back(Json{{"p", partition_json(t.partitions[i])}, {"values", t.values[i]}});
        os << std::left << std::setw(static_cast<int>(width)) << to_string(t.partitions[i]) << " ";
        for (std::int64_t v : t.values[i]) os << ' ' << std::right << std::setw(static_cast<int>(width)) << v;
        os << '\n';
      }
      reply.json = Json{{"n", n}, {"classes", classes}, {"rows", rows}};
      reply.text = os.str();
    } else if (c_lr->parsed() || c_prod->parsed() || c_pleth->parsed()) {
      const Partition lambda = parse_partition(a1);
      const Partition mu = parse_partition(a2);
      SchurVector v;
      if (c_lr->parsed()) {
        for (const auto& [nu, c] : lr_expansion(lambda, mu)) v.add(nu, Rational(static_cast<long>(c)));
      } else if (c_prod->parsed()) {
        v = schur_product_via_characters(SchurVector(lambda), SchurVector(mu));
      } else {
        if (mu.empty()) throw ParseError("plethysm: inner partition must be non-empty");
        v = plethysm(SchurVector(lambda), SchurVector(mu));
      }
      reply.json = Json{{"lambda", partition_json(lambda)}, {"mu", partition_json(mu)}, {"terms", schur_json(v)}};
      reply.text = schur_text(v);
    } else if (c_lie->parsed()) {
      const int n = parse_int(a1, "N");
      if (n < 1) throw ParseError("lie: N must be positive");
      const LieClass& l = lie_module(n);
      Json mult = Json::array();
      std::ostringstream os;
      for (const auto& [p, m] : l.mult) {
        mult.push_back(Json{{"p", partition_json(p)}, {"m", m}});
        os << to_string(p) << "  " << m << '\n';
      }
      reply.json = Json{{"n", n}, {"mult", mult}};
      reply.text = os.str();
    } else if (c_beta->parsed()) {
      const Partition nu = parse_partition(a1);
      const GrothendieckClass c = beta_class(nu, opts);
      reply.json = Json{{"nu", partition_json(nu)}, {"factors", class_json(c)}};
      reply.text = "nu " + to_string(nu) + '\n' + class_text(c, "  ");
    } else if (c_psi->parsed()) {
      const int d = parse_int(a1, "D");
      const BigradedClass& b = psi_pcoalg_class(d, opts);
      Json rows = Json::array();
      std::ostringstream os;
      for (const Partition& nu : partitions_of(d)) {
        const GrothendieckClass row = b.row(nu);
        rows.push_back(Json{{"nu", partition_json(nu)}, {"factors", class_json(row)}});
        os << "nu " << to_string(nu) << '\n' << class_text(row, "  ");
      }
      reply.json = Json{{"d", d}, {"rows", rows}};
      reply.text = os.str();
    } else if (c_omega->parsed() || c_adbar->parsed()) {
      const Partition nu = parse_partition(a1);
      if (nu.empty()) throw ParseError("nu must be non-empty");
      reply = c_omega->parsed() ? outer_reply(omega_beta(nu, opts), true) : outer_reply(adbar_euler(nu, opts), false);
    } else if (c_ext1->parsed()) {
      const Partition rho = parse_partition(a1);
      const Partition nu = parse_partition(a2);
      const std::int64_t d = outer ? ext1_out_dim(rho, nu) : ext1_dim(rho, nu);
      reply.json = Json{{"rho", partition_json(rho)}, {"nu", partition_json(nu)}, {"outer", outer}, {"dim", d}};
      reply.text = std::to_string(d) + '\n';
    } else if (c_hhg->parsed()) {
      reply = hh_reply(hh_inj_gamma(parse_int(a1, "D"), static_cast<std::uint64_t>(parse_int(a2, "R")), opts));
    } else if (c_hhf->parsed()) {
      reply = hh_reply(hh_inj_fin(parse_partition(a1), static_cast<std::uint64_t>(parse_int(a2, "R")), opts));
    } else if (c_hhd->parsed()) {
      reply = hh_reply(hh_dual_numbers(static_cast<std::uint64_t>(parse_int(a1, "R")), parse_int(a2, "DMAX"), opts));
    } else if (c_tor->parsed()) {
      const int m = parse_int(a1, "M");
      const int n = parse_int(a2, "N");
      if (m < 1 || n < 1) throw ParseError("tor: M and N must be positive");
      const TorDimension t = tor_gamma_dim(m, n, opts);
      reply.json = Json{{"m", m}, {"n", n}, {"deg", t.degree}, {"dim", t.dimension}};
      reply.text = "deg " + std::to_string(t.degree) + "  dim " + std::to_string(t.dimension) + '\n';
    } else if (c_dims->parsed()) {
      const auto r = static_cast<std::uint64_t>(parse_int(a3, "R"));
      const std::int64_t d = dims_of_file(a1, r);
      reply.json = Json{{"file", a1}, {"r", r}, {"dim", d}};
      reply.text = std::to_string(d) + '\n';
    }
  } catch (const BoundExceeded& e) {
    return fail(json, "BoundExceeded", e.what(), kExitUnsupported,
                Json{{"warning", e.what()}, {"requested", e.requested()}, {"bound", e.bound()}});
  } catch (const ParseError& e) {
    return fail(json, "ParseError", e.what(), kExitParse);
  } catch (const std::invalid_argument& e) {
    return fail(json, "InvalidArgument", e.what(), kExitParse);
  } catch (const std::overflow_error& e) {
    return fail(json, "Overflow", e.what(), kExitUnsupported);
  }

  if (json)
    out << reply.json.dump() << '\n';
  else
    out << reply.text;
  if (reply.status == kExitUnsupported && !json) err << "warning: composition factors undetermined\n";
  return reply.status;
}

}  // namespace hhgr::cli
