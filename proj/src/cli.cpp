#include "susa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "susa/error.hpp"
#include "susa/expression.hpp"
#include "susa/report.hpp"

namespace susa::cli {

namespace {

std::vector<std::string> figure_ids() {
  std::vector<std::string> out;
  for (auto kind : all_figure_kinds()) out.emplace_back(figure_id(kind));
  return out;
}

std::vector<std::string> record_ids() {
  std::vector<std::string> out{"all"};
  for (const auto& r : builtin_records()) out.push_back(r.id);
  return out;
}

const std::vector<std::string> kProfiles{"coarse", "fine-pi"};

Rational parse_radicand(const std::string& text) {
  if (text.find(';') != std::string::npos) return parse_absolute(text).to_rational();
  return Rational::parse(text);
}

Sexagesimal parse_placed(const std::string& text, long exponent) {
  Numeral n = parse(text);
  if (auto* f = std::get_if<FloatingSexagesimal>(&n)) return place_value(*f, exponent);
  return std::get<Sexagesimal>(n);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

struct Options {
  bool json = false;
  std::vector<std::string> expression;
  long exponent = 0;
  std::string radicand;
  int steps = 5;
  std::optional<std::size_t> trunc;
  std::size_t places = 4;
  std::string numeral;
  std::string p, q;
  std::string figure;
  std::string profile = "coarse";
  std::optional<std::string> sqrt21;
  std::optional<std::string> circumference;
  std::string record = "all";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact reconstruction of two Babylonian area coefficients", "susa"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate sexagesimal arithmetic (+ - * recip, parentheses)");
  eval->add_option("expression", o.expression, "Expression, e.g. \"2 - 1;45\"")->required();
  eval->add_option("--exponent", o.exponent, "Place radix-free literals at 60^exponent");
  eval->add_flag("--json", o.json);

  auto* sqrt = app.add_subcommand("sqrt", "Mean/quotient square-root iteration");
  sqrt->add_option("N", o.radicand, "Radicand as p/q or a sexagesimal with ';'")->required();
  sqrt->add_option("--steps", o.steps, "Number of approximants")->check(CLI::PositiveNumber);
  sqrt->add_option("--trunc", o.trunc, "Truncate each step to this many places")->check(CLI::PositiveNumber);
  sqrt->add_option("--places", o.places, "Display places");
  sqrt->add_flag("--json", o.json);

  auto* recip = app.add_subcommand("recip", "Exact sexagesimal reciprocal");
  recip->add_option("numeral", o.numeral)->required();
  recip->add_option("--exponent", o.exponent, "Place a radix-free numeral at 60^exponent");
  recip->add_flag("--json", o.json);

  auto* solve = app.add_subcommand("solve", "Solve x^2 + p x = q by completing the square");
  solve->add_option("p", o.p, "Surd literal, e.g. \"sqrt(6)/2\"")->required();
  solve->add_option("q", o.q, "Surd literal, e.g. \"1/2\"")->required();
  solve->add_flag("--json", o.json);

  auto* coeff = app.add_subcommand("coeff", "Babylonian area coefficient of a figure");
  coeff->add_option("figure", o.figure)->required()->check(CLI::IsMember(figure_ids()));
  coeff->add_option("--profile", o.profile)->check(CLI::IsMember(kProfiles));
  coeff->add_option("--sqrt21", o.sqrt21, "a5, back-solved, or a literal");
  coeff->add_option("--places", o.places, "Truncation places");
  coeff->add_option("--circumference", o.circumference, "circle only: area from this circumference");
  coeff->add_flag("--json", o.json);

  auto* verify_cmd = app.add_subcommand("verify", "Verify reconstructions against attested values");
  verify_cmd->add_option("id", o.record)->check(CLI::IsMember(record_ids()));
  auto* verify_profile = verify_cmd->add_option("--profile", o.profile)->check(CLI::IsMember(kProfiles));
  verify_cmd->add_option("--sqrt21", o.sqrt21, "a5 (default), back-solved, or a literal");
  verify_cmd->add_flag("--json", o.json);

  auto* report = app.add_subcommand("report", "Full reproduction bundle");
  report->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*eval) {
      const std::string text = join(o.expression);
      const Sexagesimal value = evaluate_expression(text, o.exponent);
      if (o.json) {
        Json j{{"expression", text}, {"sexagesimal", value.str()}, {"rational", value.to_rational().str()},
               {"decimal", numeric_eval(value.to_rational(), 9)}};
        out << j.dump(2) << '\n';
      } else {
        out << value.str() << '\n';
      }
    } else if (*sqrt) {
      const Rational n = parse_radicand(o.radicand);
      const IterationTrace trace =
          o.trunc ? truncated_iteration(n, o.steps, *o.trunc) : babylonian_sqrt(n, o.steps);
      out << (o.json ? to_json(trace, o.places).dump(2) + "\n" : to_text(trace, o.places));
    } else if (*recip) {
      const Sexagesimal x = parse_placed(o.numeral, o.exponent);
      const Sexagesimal r = reciprocal(x);
      if (o.json) {
        Json j{{"input", x.str()}, {"reciprocal", r.str()}, {"rational", r.to_rational().str()}};
        out << j.dump(2) << '\n';
      } else {
        out << r.str() << '\n';
      }
    } else if (*solve) {
      const QuadraticSolution s = solve_quadratic(parse_surd(o.p), parse_surd(o.q));
      if (o.json) {
        out << to_json(s).dump(2) << '\n';
      } else {
        out << "x = " << s.root.str() << '\n'
            << "(x + " << s.half_p.str() << ")^2 = " << s.completed_square.str() << '\n'
            << "x ~ " << numeric_eval(s.root, 9) << '\n';
      }
    } else if (*coeff) {
      ApproximationProfile profile = profile_from_id(o.profile);
      std::optional<Sqrt21Substitute> sub;
      if (o.sqrt21) {
        sub = resolve_sqrt21(*o.sqrt21);
        profile = profile.with_root(21, sub->value);
      }
      const FigureKind kind = figure_from_id(o.figure);
      if (o.circumference) {
        if (kind != FigureKind::circle)
          throw CLI::ValidationError("--circumference", "only applies to the circle figure");
        const auto c = circle_area_from_circumference(parse_placed(*o.circumference, 0), profile);
        if (o.json) {
          Json j{{"figure", o.figure}, {"profile", profile.name}, {"coefficient", c.coefficient.str()},
                 {"circumference", parse_placed(*o.circumference, 0).str()}, {"area", c.area.str()}};
          out << j.dump(2) << '\n';
        } else {
          out << c.area.str() << '\n';
        }
      } else {
        const BabylonianArea area = babylonian_area(make_figure(kind), profile, o.places);
        if (o.json) {
          Json j{{"figure", o.figure},
                 {"profile", profile.name},
                 {"sqrt21", sub ? Json{{"label", sub->label}, {"rational", sub->value.str()}} : Json(nullptr)},
                 {"places", o.places},
                 {"sexagesimal", area.truncated.value.str()},
                 {"exact", area.truncated.exact},
                 {"rational", area.exact.str()},
                 {"decimal", numeric_eval(area.exact, 9)}};
          out << j.dump(2) << '\n';
        } else {
          out << display(area.truncated) << '\n';
        }
      }
    } else if (*verify_cmd) {
      ReconstructionOptions options;
      if (verify_profile->count() > 0) options.profile = o.profile;
      options.sqrt21 = resolve_sqrt21(o.sqrt21.value_or("a5"));
      std::vector<VerificationReport> reports;
      for (const auto& r : builtin_records())
        if (o.record == "all" || o.record == r.id) reports.push_back(verify(r, options));
      if (o.json) {
        Json j = Json::object();
        for (const auto& r : reports) j[r.id] = to_json(r);
        out << j.dump(2) << '\n';
      } else {
        for (const auto& r : reports) out << to_text(r);
      }
    } else if (*report) {
      out << emit_report(o.json ? ReportFormat::json : ReportFormat::text);
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace susa::cli
