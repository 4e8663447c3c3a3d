#include "adc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "adc/ad.hpp"
#include "adc/higher.hpp"
#include "adc/integer.hpp"
#include "adc/oracle.hpp"
#include "adc/parse.hpp"
#include "adc/rational.hpp"
#include "adc/symbolic.hpp"

namespace adc {

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string message;
};

struct Request {
  std::string command;
  std::string expr;
  std::string point;
  std::string mode = "reverse-mut";
  std::string scalar = "i64";
  std::string var;
  std::string format = "text";
  std::string vector;
  std::string family = "sum";
  std::string sizes;
  int depth = -1;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

// ---------------------------------------------------------------------------
// Scalars

template <class D>
struct ScalarIO;

template <>
struct ScalarIO<Integer> {
  static Integer parse(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Failure{kExitUsage, "invalid integer '" + s + "'"};
    return Integer(v);
  }
  static std::string text(const Integer& x) { return std::to_string(x.value()); }
  static Json json(const Integer& x) { return x.value(); }
};

template <>
struct ScalarIO<Rational> {
  static Rational parse(const std::string& s) {
    try {
      return Rational::parse(s);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "invalid rational '" + s + "'"};
    }
  }
  static std::string text(const Rational& x) { return x.to_string(); }
  static Json json(const Rational& x) {
    if (x.is_integer()) return Json::parse(x.to_string());
    return x.to_string();
  }
};

template <>
struct ScalarIO<double> {
  static double parse(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Failure{kExitUsage, "invalid number '" + s + "'"};
    return v;
  }
  static std::string text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static Json json(double x) { return x; }
};

// ---------------------------------------------------------------------------
// Shared request handling

Parsed parse_expression(const std::string& text) {
  if (text.empty()) throw Failure{kExitUsage, "no expression given (use -e)"};
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Failure{kExitParse, std::string("parse error at ") + e.what()};
  }
}

// name=value[,name=value]*
std::vector<std::pair<std::string, std::string>> parse_assignments(const std::string& text, const char* what) {
  std::vector<std::pair<std::string, std::string>> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Failure{kExitUsage, std::string("malformed ") + what + " '" + item + "'"};
    std::string name = trim(std::string_view(item).substr(0, eq));
    std::string value = trim(std::string_view(item).substr(eq + 1));
    if (!is_valid_identifier(name)) throw Failure{kExitUsage, std::string("malformed ") + what + " '" + item + "'"};
    out.emplace_back(std::move(name), std::move(value));
  }
  return out;
}

template <class D>
Valuation<D> bind_point(const Parsed& p, const std::string& text) {
  Valuation<D> point(p.registry.arity(), adc::zero<D>());
  std::set<VarId> bound;
  for (const auto& [name, value] : parse_assignments(text, "binding")) {
    const auto id = p.registry.find(name);
    D d = ScalarIO<D>::parse(value);
    if (!id) continue;
    point[id->index] = std::move(d);
    bound.insert(*id);
  }
  for (VarId v : free_vars(p.expr)) {
    if (!bound.contains(v)) {
      throw Failure{kExitMissingBinding, "missing binding for variable '" + p.registry.name_of(v) + "'"};
    }
  }
  return point;
}

// Free variables ordered by name.
std::vector<VarId> sorted_free_vars(const Parsed& p) {
  const auto fv = free_vars(p.expr);
  std::vector<VarId> vs(fv.begin(), fv.end());
  std::sort(vs.begin(), vs.end(),
            [&](VarId a, VarId b) { return p.registry.name_of(a) < p.registry.name_of(b); });
  return vs;
}

VarId choose_var(const Parsed& p, Parsed& registry_owner, const std::string& name) {
  if (!name.empty()) {
    if (!is_valid_identifier(name)) throw Failure{kExitUsage, "invalid variable name '" + name + "'"};
    return registry_owner.registry.add(name);
  }
  const auto fv = free_vars(p.expr);
  if (fv.size() == 1) return *fv.begin();
  throw Failure{kExitUsage, "choose a variable with --var"};
}

bool json_output(const Request& r) { return r.format == "json"; }

std::string dump(const Json& j) { return j.dump() + "\n"; }

// ---------------------------------------------------------------------------
// Commands

template <class D>
std::string cmd_eval(const Request& r) {
  const Parsed p = parse_expression(r.expr);
  const Valuation<D> point = bind_point<D>(p, r.point);
  const D value = eval(point, p.expr);
  if (json_output(r)) return dump(Json{{"value", ScalarIO<D>::json(value)}});
  return "value = " + ScalarIO<D>::text(value) + "\n";
}

template <class D>
std::string cmd_grad(const Request& r) {
  const Parsed p = parse_expression(r.expr);
  const Valuation<D> point = bind_point<D>(p, r.point);
  D value;
  SparseTangent<D> grad;
  if (r.mode == "brute-force") {
    value = eval(point, p.expr);
    grad = brute_force_grad(point, p.expr);
  } else {
    const auto mode = parse_mode(r.mode);
    if (!mode) throw Failure{kExitUsage, "unknown mode '" + r.mode + "'"};
    GradResult<D> g = run_mode(*mode, point, p.expr);
    value = g.value;
    grad = std::move(g.gradient);
  }
  const std::vector<VarId> vars = sorted_free_vars(p);
  if (json_output(r)) {
    Json gj = Json::object();
    for (VarId v : vars) {
      const D d = grad[v];
      if (!is_zero(d)) gj[p.registry.name_of(v)] = ScalarIO<D>::json(d);
    }
    return dump(Json{{"value", ScalarIO<D>::json(value)}, {"gradient", gj}});
  }
  std::string out = "value = " + ScalarIO<D>::text(value) + "\n";
  for (VarId v : vars) out += "d/d" + p.registry.name_of(v) + " = " + ScalarIO<D>::text(grad[v]) + "\n";
  return out;
}

std::string cmd_derive(const Request& r) {
  Parsed p = parse_expression(r.expr);
  const VarId x = choose_var(p, p, r.var);
  const int times = r.depth < 0 ? 1 : r.depth;
  const std::string text = pretty(simplify_basic(derive_n(x, p.expr, times)), p.registry);
  if (json_output(r)) return dump(Json{{"derivative", text}});
  return text + "\n";
}

template <class D>
std::string cmd_higher(const Request& r) {
  Parsed p = parse_expression(r.expr);
  const VarId x = choose_var(p, p, r.var);
  Valuation<D> point = bind_point<D>(p, r.point);
  point.resize(p.registry.arity(), adc::zero<D>());
  const std::size_t depth = r.depth < 0 ? 2 : static_cast<std::size_t>(r.depth);
  const std::vector<D> ds = take_diag(stream_all(point, p.expr), x, depth);
  if (json_output(r)) {
    Json arr = Json::array();
    for (const D& d : ds) arr.push_back(ScalarIO<D>::json(d));
    return dump(Json{{"derivatives", arr}});
  }
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? " " : "") + ScalarIO<D>::text(ds[i]);
  return out + "\n";
}

template <class D>
std::string cmd_hvp(const Request& r) {
  const Parsed p = parse_expression(r.expr);
  const Valuation<D> point = bind_point<D>(p, r.point);
  std::vector<D> dir(point.size(), adc::zero<D>());
  for (const auto& [name, value] : parse_assignments(r.vector, "direction")) {
    D d = ScalarIO<D>::parse(value);
    if (auto id = p.registry.find(name)) dir[id->index] = std::move(d);
  }
  const DenseTangent<D> hv = hessian_vector(point, p.expr, DenseTangent<D>(std::move(dir)));
  const std::vector<VarId> vars = sorted_free_vars(p);
  if (json_output(r)) {
    Json hj = Json::object();
    for (VarId v : vars) hj[p.registry.name_of(v)] = ScalarIO<D>::json(hv[v]);
    return dump(Json{{"hessian_vector", hj}});
  }
  std::string out;
  for (VarId v : vars) out += "Hv[" + p.registry.name_of(v) + "] = " + ScalarIO<D>::text(hv[v]) + "\n";
  return out;
}

std::string cmd_bench(const Request& r) {
  const auto family = parse_family(r.family);
  if (!family) throw Failure{kExitBench, "unknown family '" + r.family + "'"};
  if (!is_profile_mode(r.mode)) throw Failure{kExitUsage, "unknown mode '" + r.mode + "'"};
  std::vector<std::pair<std::size_t, std::size_t>> points;
  if (!trim(r.sizes).empty()) {
    for (const std::string& item : split(r.sizes, ',')) {
      auto read = [&](std::string_view s) {
        std::size_t v = 0;
        const std::string t = trim(s);
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v == 0) {
          throw Failure{kExitBench, "invalid size point '" + item + "'"};
        }
        return v;
      };
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        const std::size_t v = read(item);
        points.emplace_back(default_family_nodes(v), v);
      } else {
        points.emplace_back(read(std::string_view(item).substr(0, colon)),
                            read(std::string_view(item).substr(colon + 1)));
      }
    }
  }
  if (points.empty()) throw Failure{kExitBench, "no size points given (use --sizes)"};
  std::string out(kProfileCsvHeader);
  out += "\n";
  for (const auto& [n, v] : points) out += to_csv_row(profile_mode(r.mode, *family, n, v)) + "\n";
  return out;
}

template <class D>
std::string dispatch_scalar(const Request& r) {
  if (r.command == "eval") return cmd_eval<D>(r);
  if (r.command == "grad") return cmd_grad<D>(r);
  if (r.command == "higher") return cmd_higher<D>(r);
  if (r.command == "hvp") return cmd_hvp<D>(r);
  throw Failure{kExitUsage, "unknown command '" + r.command + "'"};
}

std::string dispatch(const Request& r) {
  if (r.format != "text" && r.format != "json") throw Failure{kExitUsage, "unknown format '" + r.format + "'"};
  if (r.command == "derive") return cmd_derive(r);
  if (r.command == "bench") return cmd_bench(r);
  if (r.scalar == "i64") return dispatch_scalar<Integer>(r);
  if (r.scalar == "rational") return dispatch_scalar<Rational>(r);
  if (r.scalar == "f64") return dispatch_scalar<double>(r);
  throw Failure{kExitUsage, "unknown scalar '" + r.scalar + "'"};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Request req;
  CLI::App app{"Automatic differentiation over semirings", "adc"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool point, bool scalar) {
    sub->add_option("-e,--expr", req.expr, "expression")->required();
    if (point) sub->add_option("-p,--point", req.point, "bindings name=value[,name=value]*");
    if (scalar) sub->add_option("--scalar", req.scalar, "i64 | rational | f64");
    sub->add_option("--format", req.format, "text | json");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  add_common(eval_cmd, true, true);

  auto* grad_cmd = app.add_subcommand("grad", "value and gradient");
  add_common(grad_cmd, true, true);
  grad_cmd->add_option("--mode", req.mode,
                       "forward-dense | forward-sparse | reverse | reverse-cayley | reverse-mut | brute-force");

  auto* derive_cmd = app.add_subcommand("derive", "symbolic derivative");
  add_common(derive_cmd, false, false);
  derive_cmd->add_option("--var", req.var, "variable");
  derive_cmd->add_option("--depth", req.depth, "number of derivatives");

  auto* higher_cmd = app.add_subcommand("higher", "repeated derivatives along one variable");
  add_common(higher_cmd, true, true);
  higher_cmd->add_option("--var", req.var, "variable");
  higher_cmd->add_option("--depth", req.depth, "highest derivative order");

  auto* hvp_cmd = app.add_subcommand("hvp", "Hessian-vector product");
  add_common(hvp_cmd, true, true);
  hvp_cmd->add_option("--vector", req.vector, "direction name=value[,name=value]*");

  auto* bench_cmd = app.add_subcommand("bench", "operation counts on a benchmark family");
  bench_cmd->add_option("--family", req.family, "sum | chain | product-tree");
  bench_cmd->add_option("--sizes", req.sizes, "comma-separated V or N:V points");
  bench_cmd->add_option("--mode", req.mode, "differentiation mode or symbolic");

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }
  req.command = app.get_subcommands().front()->get_name();

  try {
    result.out = dispatch(req);
  } catch (const Failure& f) {
    result.exit_code = f.code;
    result.err = "adc: " + f.message + "\n";
  } catch (const UnsupportedPrimitive& e) {
    result.exit_code = kExitCapability;
    result.err = std::string("adc: ") + e.what() + " (scalar " + req.scalar + ")\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("adc: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace adc
