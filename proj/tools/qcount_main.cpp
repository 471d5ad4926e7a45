#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

#include "qcount/enumerate.hpp"
#include "qcount/expansions.hpp"
#include "qcount/maps.hpp"
#include "qcount/odometer.hpp"
#include "qcount/question_mark.hpp"
#include "qcount/rational.hpp"
#include "qcount/serialization.hpp"
#include "qcount/verify.hpp"

namespace {

using namespace qcount;
using nlohmann::json;

using Expansion = std::variant<CfExpansion, BcfExpansion, BinaryWord, BlockSequence>;

Expansion parse_expansion(const std::string& text) {
  if (text.size() >= 2 && text.back() == 'c') return CfExpansion::parse(text);
  if (!text.empty() && text.front() == '[') return BcfExpansion::parse(text);
  if (text.size() >= 2 && text.substr(0, 2) == "0.") return BinaryWord::parse(text);
  if (!text.empty() && text.front() == '(') return BlockSequence::parse(text);
  throw std::invalid_argument("unrecognized expansion text: '" + text + "'");
}

std::string approx_str(const Rational& x) {
  std::ostringstream os;
  os << std::setprecision(17) << x.approx();
  return os.str();
}

int cmd_expand(const std::string& xtext, const std::string& system, long depth,
               const std::string& format) {
  Rational x = Rational::parse(xtext);
  json out;
  std::string text;
  if (system == "cf") {
    CfExpansion e = cf_expand(x);
    text = e.str();
    out = to_json(e);
  } else if (system == "bcf") {
    BcfExpansion e = bcf_expand(x);
    text = e.str();
    out = to_json(e);
  } else if (system == "binary" || system == "blocks") {
    bool dyadic_input = x >= Rational(0) && x <= Rational(1) &&
                        mpz_popcount(x.den().get_mpz_t()) == 1;
    if (!dyadic_input && system == "blocks") {
      throw std::domain_error("blocks expansion requires a dyadic rational");
    }
    if (dyadic_input) {
      BinaryWord w = binary_expand(Dyadic::from_rational(x));
      if (system == "binary") {
        text = w.str();
        out = to_json(w);
      } else {
        BlockSequence s = blocks_encode(w);
        text = s.str();
        out = to_json(s);
      }
    } else {
      if (depth < 0) {
        throw std::domain_error(
            "binary expansion of a non-dyadic rational needs --depth");
      }
      std::string prefix = binary_prefix(x, static_cast<std::size_t>(depth));
      text = "0." + prefix + "...";
      out = json{{"bits", prefix}, {"truncated", true}};
    }
  } else {
    throw std::invalid_argument("unknown system '" + system + "'");
  }
  std::cout << (format == "json" ? out.dump() : text) << "\n";
  return 0;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& format) {
  Expansion in = parse_expansion(input);
  json out;
  std::string text;
  auto unsupported = [&]() -> std::invalid_argument {
    return std::invalid_argument("unsupported conversion to '" + to + "'");
  };
  if (std::holds_alternative<CfExpansion>(in) || std::holds_alternative<BcfExpansion>(in)) {
    CfExpansion cf = std::holds_alternative<CfExpansion>(in)
                         ? std::get<CfExpansion>(in)
                         : bcf_to_cf(std::get<BcfExpansion>(in));
    if (to == "cf") {
      text = cf.str();
      out = to_json(cf);
    } else if (to == "bcf") {
      BcfExpansion e = std::holds_alternative<BcfExpansion>(in)
                           ? std::get<BcfExpansion>(in)
                           : cf_to_bcf(cf);
      text = e.str();
      out = to_json(e);
    } else {
      throw unsupported();
    }
  } else {
    BinaryWord w = std::holds_alternative<BinaryWord>(in)
                       ? std::get<BinaryWord>(in)
                       : blocks_decode(std::get<BlockSequence>(in));
    if (to == "binary") {
      text = w.str();
      out = to_json(w);
    } else if (to == "blocks") {
      BlockSequence s = blocks_encode(w);
      text = s.str();
      out = to_json(s);
    } else {
      throw unsupported();
    }
  }
  std::cout << (format == "json" ? out.dump() : text) << "\n";
  return 0;
}

int cmd_eval(const std::string& input, const std::string& format) {
  Expansion in = parse_expansion(input);
  Rational value = std::visit(
      [](const auto& e) -> Rational {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, CfExpansion>) {
          return cf_eval(e);
        } else if constexpr (std::is_same_v<E, BcfExpansion>) {
          return bcf_eval(e);
        } else if constexpr (std::is_same_v<E, BinaryWord>) {
          return word_value(e).to_rational();
        } else {
          return word_value(blocks_decode(e)).to_rational();
        }
      },
      in);
  std::cout << (format == "json" ? to_json(value).dump() : value.str()) << "\n";
  return 0;
}

int cmd_orbit(const std::string& map, const std::string& xtext, unsigned long steps,
              const std::string& format) {
  MapId m = parse_map_id(map);
  Rational cur = Rational::parse(xtext);
  if (!in_domain(m, cur)) {
    throw std::domain_error(cur.str() + " is outside the domain of " +
                            std::string(map_name(m)));
  }
  auto next = [&](unsigned long step) {
    try {
      cur = apply_map(m, cur);
    } catch (const std::domain_error&) {
      throw std::domain_error("orbit stopped at step " + std::to_string(step) + ": " +
                              cur.str() + " is outside the domain of " +
                              std::string(map_name(m)));
    }
  };
  if (format == "json") {
    auto points = json::array();
    for (unsigned long i = 0;; ++i) {
      points.push_back(cur.str());
      if (i == steps) break;
      next(i + 1);
    }
    std::cout << json{{"map", map_name(m)}, {"orbit", points}}.dump() << "\n";
    return 0;
  }
  for (unsigned long i = 0;; ++i) {
    if (format == "csv") {
      std::cout << i << "," << cur.str() << "\n";
    } else {
      std::cout << cur.str() << "\n";
    }
    if (i == steps) break;
    next(i + 1);
  }
  return 0;
}

int cmd_enumerate(const std::string& target, unsigned long count, unsigned long from,
                  const std::string& format) {
  MapId m;
  if (target == "positive") {
    m = MapId::F;
  } else if (target == "unit") {
    m = MapId::T;
  } else if (target == "dyadic") {
    m = MapId::D2;
  } else {
    throw std::invalid_argument("unknown target '" + target + "'");
  }
  MapOrbit walk(m, Rational(0));
  for (unsigned long i = 0; i < from; ++i) walk.advance();
  auto value_str = [&]() {
    return target == "dyadic" ? Dyadic::from_rational(walk.value()).str()
                              : walk.value().str();
  };
  if (format == "json") {
    auto rows = json::array();
    for (unsigned long i = 0; i < count; ++i) {
      rows.push_back({{"n", from + i}, {"value", value_str()}});
      walk.advance();
    }
    std::cout << json{{"target", target}, {"values", rows}}.dump() << "\n";
    return 0;
  }
  const char* sep = format == "csv" ? "," : "\t";
  for (unsigned long i = 0; i < count; ++i) {
    std::cout << from + i << sep << value_str() << "\n";
    walk.advance();
  }
  return 0;
}

int cmd_index_of(const std::string& xtext, const std::string& format) {
  Integer n = index_of_unit(Rational::parse(xtext));
  if (format == "json") {
    std::cout << json{{"n", n.get_str()}}.dump() << "\n";
  } else {
    std::cout << n.get_str() << "\n";
  }
  return 0;
}

int cmd_qmark(const std::string& xtext, const std::string& algo, const std::string& format) {
  Dyadic d = qmark(Rational::parse(xtext), parse_qmark_algo(algo));
  if (format == "json") {
    std::cout << json{{"dyadic", d.str()}, {"bits", d.bits_str()}}.dump() << "\n";
  } else {
    std::cout << d.str() << " " << d.bits_str() << "\n";
  }
  return 0;
}

int cmd_qmark_inv(const std::string& dtext, const std::string& format) {
  Rational x = qmark_inverse(Dyadic::parse(dtext));
  std::cout << (format == "json" ? to_json(x).dump() : x.str()) << "\n";
  return 0;
}

int cmd_graph_data(const std::string& map, unsigned long samples, bool approx,
                   const std::string& format) {
  MapId m = parse_map_id(map);
  auto rows = json::array();
  for (unsigned long i = 0; i < samples; ++i) {
    Rational x = Rational(Integer(i), Integer(samples));
    if (!in_domain(m, x)) continue;
    Rational y = apply_map(m, x);
    std::string xs = approx ? approx_str(x) : x.str();
    std::string ys = approx ? approx_str(y) : y.str();
    if (format == "json") {
      rows.push_back({{"x", xs}, {"y", ys}});
    } else {
      std::cout << xs << "," << ys << "\n";
    }
  }
  if (format == "json") std::cout << rows.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, unsigned long bound, const std::string& format) {
  auto reports = run_suite(parse_suite(suite), bound);
  bool all_ok = true;
  if (format == "json") {
    auto rows = json::array();
    for (const auto& r : reports) {
      all_ok = all_ok && r.ok;
      rows.push_back({{"suite", r.suite},
                      {"checked", r.checked},
                      {"ok", r.ok},
                      {"counterexample", r.counterexample}});
    }
    std::cout << rows.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      if (r.ok) {
        std::cout << r.suite << ": checked " << r.checked << " identities: ok\n";
      } else {
        all_ok = false;
        std::cout << r.suite << ": FAILED after " << r.checked << " identities\n"
                  << r.counterexample << "\n";
      }
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for continued fractions, odometers and ?"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* expand = app.add_subcommand("expand", "expand a rational in a numeration system");
  std::string expand_x, expand_system;
  long expand_depth = -1;
  expand->add_option("x", expand_x, "rational input")->required();
  expand->add_option("--system", expand_system, "numeration system")
      ->required()
      ->check(CLI::IsMember({"cf", "bcf", "binary", "blocks"}));
  expand->add_option("--depth", expand_depth, "bit count for non-dyadic binary output");

  auto* convert = app.add_subcommand("convert", "recode an expansion of the same value");
  std::string convert_in, convert_to;
  convert->add_option("expansion", convert_in, "expansion text")->required();
  convert->add_option("--to", convert_to, "target system")
      ->required()
      ->check(CLI::IsMember({"cf", "bcf", "binary", "blocks"}));

  auto* eval = app.add_subcommand("eval", "evaluate an expansion to its value");
  std::string eval_in;
  eval->add_option("expansion", eval_in, "expansion text")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate a map exactly");
  std::string orbit_map, orbit_x;
  unsigned long orbit_steps = 0;
  orbit_cmd->add_option("x", orbit_x, "starting point")->required();
  orbit_cmd->add_option("--map", orbit_map, "map name")->required();
  orbit_cmd->add_option("--steps", orbit_steps, "number of steps")->required();

  auto* enumerate = app.add_subcommand("enumerate", "stream an enumeration orbit");
  std::string enum_target = "unit";
  unsigned long enum_count = 0, enum_from = 0;
  enumerate->add_option("--target", enum_target, "unit, positive or dyadic")
      ->check(CLI::IsMember({"unit", "positive", "dyadic"}));
  enumerate->add_option("--count", enum_count, "how many entries")->required();
  enumerate->add_option("--from", enum_from, "starting index");

  auto* index_of = app.add_subcommand("index-of", "enumeration index of a rational in [0,1)");
  std::string index_x;
  index_of->add_option("x", index_x, "rational input")->required();

  auto* qmark_cmd = app.add_subcommand("qmark", "Minkowski question mark of a rational");
  std::string qmark_x, qmark_algo = "bcf";
  qmark_cmd->add_option("x", qmark_x, "rational in [0,1]")->required();
  qmark_cmd->add_option("--algo", qmark_algo, "algorithm")
      ->check(CLI::IsMember({"mediant", "denjoy", "bcf"}));

  auto* qmark_inv = app.add_subcommand("qmark-inv", "inverse question mark of a dyadic");
  std::string qmark_inv_d;
  qmark_inv->add_option("d", qmark_inv_d, "dyadic in [0,1)")->required();

  auto* graph = app.add_subcommand("graph-data", "sample (x, m(x)) pairs on a grid");
  std::string graph_map;
  unsigned long graph_samples = 0;
  bool graph_approx = false;
  graph->add_option("--map", graph_map, "map name")->required();
  graph->add_option("--samples", graph_samples, "grid resolution")
      ->required()
      ->check(CLI::Range(2ul, ~0ul));
  graph->add_flag("--approx", graph_approx, "emit floating point samples");

  auto* verify = app.add_subcommand("verify", "check an identity family exhaustively");
  std::string verify_suite = "all";
  unsigned long verify_bound = 50;
  verify->add_option("--suite", verify_suite, "identity family")
      ->check(CLI::IsMember({"action", "conjugacy", "qmark", "jump", "measure",
                             "odometer-cover", "enumeration", "all"}));
  verify->add_option("--bound", verify_bound, "denominator/index/level bound")
      ->check(CLI::Range(1ul, ~0ul));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) return cmd_expand(expand_x, expand_system, expand_depth, format);
    if (*convert) return cmd_convert(convert_in, convert_to, format);
    if (*eval) return cmd_eval(eval_in, format);
    if (*orbit_cmd) return cmd_orbit(orbit_map, orbit_x, orbit_steps, format);
    if (*enumerate) return cmd_enumerate(enum_target, enum_count, enum_from, format);
    if (*index_of) return cmd_index_of(index_x, format);
    if (*qmark_cmd) return cmd_qmark(qmark_x, qmark_algo, format);
    if (*qmark_inv) return cmd_qmark_inv(qmark_inv_d, format);
    if (*graph) return cmd_graph_data(graph_map, graph_samples, graph_approx, format);
    if (*verify) return cmd_verify(verify_suite, verify_bound, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
