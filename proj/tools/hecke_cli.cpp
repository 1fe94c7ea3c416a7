#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/braid_word.hpp"
#include "hecke/closure_decomposition.hpp"
#include "hecke/errors.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/invariants.hpp"
#include "hecke/markov_trace.hpp"
#include "hecke/oracles.hpp"
#include "hecke/quantum_e.hpp"
#include "hecke/scalar_parser.hpp"
#include "hecke/specht.hpp"

namespace {

using namespace hecke;
using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kInputError = 2, kPrecondition = 3, kInternal = 4 };

// Flags that are individually valid but do not fit together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.
struct Options {
  std::string field;  // empty: HECKE_FIELD or generic
  std::uint32_t p = 0;
  std::optional<std::string> q, q1, q2;
  std::string format = "text";
  std::optional<int> strands;
  std::string word;
  int n = 0;
  bool quick = false, exhaustive = false, inject_fault = false;
  int max_len = 5;
};

// Field and parameters after defaults. Generic parameters are the formal
// variables; specialized fields default to (q1, q2) = (-1, q).
template <class Field>
struct Parameters {
  Field field;
  typename Field::Scalar q1, q2, q;
  bool formal = true;  // all three left as variables
};

using AnyParameters = std::variant<Parameters<RationalFunctionField>, Parameters<RationalField>, Parameters<PrimeField>>;

template <class Field>
Parameters<Field> make_parameters(const Field& field, const Options& opt) {
  auto value = [&](const std::optional<std::string>& text) { return field.from_expression(parse_scalar(*text)); };
  Parameters<Field> out{field, {}, {}, {}, !(opt.q || opt.q1 || opt.q2)};
  if constexpr (std::is_same_v<Field, RationalFunctionField>) {
    out.q = opt.q ? value(opt.q) : RationalFunction::variable(Var::q);
    out.q1 = opt.q1 ? value(opt.q1) : RationalFunction::variable(Var::q1);
    out.q2 = opt.q2 ? value(opt.q2) : RationalFunction::variable(Var::q2);
  } else {
    if (!opt.q && !opt.q2) throw UsageError("a specialized field needs --q (or --q2)");
    out.q1 = opt.q1 ? value(opt.q1) : field.from_integer(-1);
    out.q2 = opt.q2 ? value(opt.q2) : value(opt.q);
    out.q = opt.q ? value(opt.q) : -out.q2 / out.q1;
  }
  return out;
}

AnyParameters resolve_field(Options opt) {
  if (opt.field.empty()) {
    const char* env = std::getenv("HECKE_FIELD");
    opt.field = env ? env : "generic";
    // HECKE_FIELD=Fp:7 carries the prime along
    if (auto colon = opt.field.find(':'); colon != std::string::npos) {
      if (opt.p == 0) {
        const std::string digits = opt.field.substr(colon + 1);
        if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
          throw UsageError("HECKE_FIELD=" + opt.field + " does not name a prime");
        opt.p = static_cast<std::uint32_t>(std::stoul(digits));
      }
      opt.field.resize(colon);
    }
  }
  if (opt.field == "generic") return make_parameters(RationalFunctionField{}, opt);
  if (opt.field == "Q") return make_parameters(RationalField{}, opt);
  if (opt.field == "Fp") {
    if (opt.p == 0) throw UsageError("--field Fp needs --p");
    PrimeField field(opt.p);
    if (opt.q) {
      auto q = parse_scalar(*opt.q);
      if (!q.is_constant() || q.numerator().constant_value() <= 0 || q.numerator().constant_value() >= opt.p)
        throw DomainError("q must be an integer with 0 < q < p");
    }
    return make_parameters(field, opt);
  }
  throw UsageError("unknown field '" + opt.field + "' (expected generic, Q or Fp)");
}

BraidWord read_word(const Options& opt) { return parse_braid_word(opt.word, opt.strands); }

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_reduce(const Options& opt) {
  const auto b = read_word(opt);
  return std::visit(
      [&](const auto& par) {
        HeckeAlgebra h(b.strands(), par.q1, par.q2, par.field);
        auto x = h.from_braid_word(b);
        json terms = json::array();
        for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
          terms.push_back({{"permutation", it->first.to_string()}, {"coefficient", to_string(it->second)}});
        emit(opt, {{"braid", b.to_string()}, {"field", par.field.name()}, {"terms", terms}}, x.to_string() + "\n");
        return kOk;
      },
      resolve_field(opt));
}

int cmd_homfly(const Options& opt) {
  const auto b = read_word(opt);
  return std::visit(
      [&](const auto& par) {
        MarkovTrace trace{HeckeAlgebra(1, par.q1, par.q2, par.field)};
        auto value = to_string(trace_of_braid(b, trace));
        emit(opt, {{"braid", b.to_string()}, {"field", par.field.name()}, {"homflypt", value}}, value + "\n");
        return kOk;
      },
      resolve_field(opt));
}

// Jones and decompositions exist only with formal parameters.
void require_formal(const AnyParameters& par, const std::string& what) {
  const auto* generic = std::get_if<Parameters<RationalFunctionField>>(&par);
  if (!generic || !generic->formal)
    throw UnsupportedField(what + " needs the generic field with formal parameters");
}

int cmd_jones(const Options& opt) {
  const auto b = read_word(opt);
  require_formal(resolve_field(opt), "the Jones polynomial");
  auto v = jones(b);
  emit(opt,
       {{"braid", b.to_string()}, {"variable", v.in_t() ? "t" : "s"}, {"components", v.components()},
        {"jones", v.to_string()}},
       v.to_string() + "\n");
  return kOk;
}

int cmd_decompose(const Options& opt) {
  const auto b = read_word(opt);
  require_formal(resolve_field(opt), "closure decomposition");
  auto d = decompose_closure(b);
  json coefficients = json::array();
  for (const auto& [lambda, c] : d.coefficients)
    coefficients.push_back({{"partition", lambda.to_string()}, {"coefficient", c.to_string()}});
  emit(opt, {{"braid", b.to_string()}, {"coefficients", coefficients}}, d.to_string());
  return kOk;
}

int cmd_specht(const Options& opt) {
  if (opt.n < 0) throw DomainError("--n must be nonnegative");
  return std::visit(
      [&](const auto& par) {
        using S = std::decay_t<decltype(par.q)>;
        constexpr bool generic = std::is_same_v<S, RationalFunction>;
        const QuantumE e = quantum_e(par.q);
        json rows = json::array();
        std::string text = "# field " + par.field.name() + ", q = " + to_string(par.q) + ", e = " + e.to_string() + "\n";
        text += generic ? "partition\tdim_S\tdim_D\tgram_det\n" : "partition\tdim_S\tdim_D\te_restricted\n";
        if (opt.n > 0) {
          SpechtContext<S> ctx(opt.n, par.q, par.field);
          for (const auto& lambda : partitions_of(opt.n)) {
            auto s = specht_module(lambda, ctx);
            const int dim_d = dim_D_lambda(s);
            json row{{"partition", lambda.to_string()}, {"dim_S", s.dimension()}, {"dim_D", dim_d}};
            std::string line = lambda.to_string() + "\t" + std::to_string(s.dimension()) + "\t" + std::to_string(dim_d) + "\t";
            if constexpr (generic) {
              auto det = to_string(gram_determinant(s));
              row["gram_det"] = det;
              line += det;
            } else {
              bool restricted = e_restricted(lambda, e);
              row["e_restricted"] = restricted;
              line += restricted ? "yes" : "no";
            }
            rows.push_back(row);
            text += line + "\n";
          }
        }
        emit(opt, {{"n", opt.n}, {"field", par.field.name()}, {"q", to_string(par.q)}, {"e", e.to_string()}, {"rows", rows}},
             text);
        return kOk;
      },
      resolve_field(opt));
}

int cmd_verify(const Options& opt) {
  const Fault fault = opt.inject_fault ? Fault::FlippedInverse : Fault::None;
  if (opt.exhaustive) {
    auto report = exhaustive_word_closure(opt.n, opt.max_len, fault);
    json violations = json::array();
    std::string text = "checked " + std::to_string(report.checked) + "\nviolations " +
                       std::to_string(report.violations.size()) + "\n";
    for (const auto& v : report.violations) {
      violations.push_back({{"left", v.left.to_string()}, {"right", v.right.to_string()}, {"relation", v.relation}});
      text += v.relation + "\t" + v.left.to_string() + "\t" + v.right.to_string() + "\n";
    }
    emit(opt, {{"checked", report.checked}, {"violations", violations}}, text);
    return report.violations.empty() ? kOk : kInternal;
  }
  auto outcomes = quick_verification(fault);
  json checks = json::array();
  std::string text;
  bool ok = true;
  for (const auto& c : outcomes) {
    ok = ok && c.passed();
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}, {"detail", c.detail}});
    text += std::string(c.passed() ? "PASS" : "FAIL") + "  " + c.name + " (" + std::to_string(c.checked) + ")";
    text += c.passed() ? "\n" : ": " + c.detail + "\n";
  }
  emit(opt, {{"passed", ok}, {"checks", checks}}, text);
  return ok ? kOk : kInternal;
}

void add_field_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--field", opt.field, "generic, Q or Fp (default: $HECKE_FIELD, else generic)")
      ->check(CLI::IsMember({"generic", "Q", "Fp"}));
  cmd->add_option("--p", opt.p, "prime for --field Fp");
  cmd->add_option("--q", opt.q, "Specht parameter q; with a specialized field also q2 unless given");
  cmd->add_option("--q1", opt.q1, "value of q1");
  cmd->add_option("--q2", opt.q2, "value of q2");
  cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_word_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--strands", opt.strands, "number of strands (or a Bn: prefix on the word)");
  cmd->add_option("word", opt.word, "braid word, e.g. \"1 -2 1\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwahori-Hecke algebras of braid groups: reduction, traces, link invariants, Specht modules"};
  app.require_subcommand(1);
  Options opt;

  auto* reduce = app.add_subcommand("reduce", "expand a braid's image in the T_w basis");
  auto* homfly = app.add_subcommand("homfly", "HOMFLYPT polynomial: the Markov trace of the image");
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of the closure");
  auto* decompose = app.add_subcommand("decompose", "closure as a combination of the closures of b_lambda");
  for (auto* cmd : {reduce, homfly, jones_cmd, decompose}) {
    add_field_options(cmd, opt);
    add_word_options(cmd, opt);
  }
  auto* specht = app.add_subcommand("specht", "Specht modules of H_n(-1, q): dimensions of S and D");
  add_field_options(specht, opt);
  specht->add_option("--n", opt.n, "degree")->required();
  auto* verify = app.add_subcommand("verify", "run the built-in oracle checks");
  verify->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* quick = verify->add_flag("--quick", opt.quick, "bounded property checks (default)");
  verify->add_flag("--exhaustive", opt.exhaustive, "all words up to --max-len against single relations")->excludes(quick);
  verify->add_option("--n", opt.n, "strands for --exhaustive")->default_val(3);
  verify->add_option("--max-len", opt.max_len, "word length bound for --exhaustive")->default_val(5);
  verify->add_flag("--inject-fault", opt.inject_fault, "use a wrong generator inverse; the checks must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(opt);
    if (homfly->parsed()) return cmd_homfly(opt);
    if (jones_cmd->parsed()) return cmd_jones(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
    if (specht->parsed()) return cmd_specht(opt);
    return cmd_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    // unsupported fields, domain errors, division by zero, context mismatches
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
