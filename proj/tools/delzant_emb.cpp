// delzant-emb: validate Delzant polytopes, compute the embedding-space
// invariant Emb as a step function of t = r^2, generate catalog polytopes,
// and render 2D figures as SVG.
//
// Exit codes: 0 ok, 1 input/geometry error, 2 valid polytope but not Delzant.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "demb/catalog.hpp"
#include "demb/emb.hpp"
#include "demb/json_io.hpp"
#include "demb/svg.hpp"

namespace {

using namespace demb;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotDelzant = 2;

Polytope read_polytope(const std::string& input_path) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_path);
    if (!in) throw ParseError("cannot open '" + input_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

// --at takes t = r^2 as an exact rational; --r takes a decimal radius and
// squares it exactly.
Rational radius_to_t(const std::string& at, const std::string& r) {
  if (!at.empty() && !r.empty())
    throw ParseError("give only one of --at / --r");
  if (!at.empty()) return parse_rational(at);
  Rational rr = parse_rational(r);
  return rr * rr;
}

struct ChoppedParams {
  std::string base;
  std::string vertex;  // index or "x,y" coordinates
  std::string eps;
};

Polytope make_catalog(const std::string& name, int n, int m,
                      const std::string& lambda, const std::string& a,
                      const std::string& b, int k, const ChoppedParams& chop) {
  if (name == "simplex") return catalog_simplex(n, parse_rational(lambda));
  if (name == "cube") return catalog_cube(n, parse_rational(lambda));
  if (name == "cp_product")
    return catalog_cp_product(n, m, parse_rational(lambda));
  if (name == "hirzebruch")
    return catalog_hirzebruch(parse_rational(a), parse_rational(b), Int(k));
  if (name == "pentagon") return catalog_pentagon();
  if (name == "chopped") {
    if (chop.base.empty() || chop.vertex.empty() || chop.eps.empty())
      throw InvalidParameters("chopped needs --base, --vertex and --eps");
    Polytope base = make_catalog(chop.base, n, m, lambda, a, b, k, {});
    int idx;
    if (chop.vertex.find(',') != std::string::npos) {
      QVector pt;
      std::stringstream ss(chop.vertex);
      std::string tok;
      while (std::getline(ss, tok, ',')) pt.push_back(parse_rational(tok));
      idx = find_vertex(base, pt);
      if (idx < 0)
        throw InvalidParameters("no vertex at (" + chop.vertex + ")");
    } else {
      idx = std::stoi(chop.vertex);
    }
    return catalog_chopped(base, idx, parse_rational(chop.eps));
  }
  throw UnknownEntry(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant symplectic ball embedding invariants of Delzant polytopes"};
  app.require_subcommand(1);

  std::string input;
  std::string at_flag, r_flag;
  bool open_mode = false;

  auto* validate = app.add_subcommand("validate", "Check the Delzant conditions");
  validate->add_option("--input", input, "polytope JSON file (default stdin)");

  auto* emb = app.add_subcommand("emb", "Compute the invariant step function");
  emb->add_option("--input", input, "polytope JSON file (default stdin)");
  emb->add_option("--at", at_flag, "evaluate at t = r^2 (rational)");
  emb->add_option("--r", r_flag, "evaluate at radius r (decimal)");
  emb->add_flag("--open", open_mode, "open-ball semantics (>= instead of >)");

  std::string cat_name, cat_lambda = "1", cat_a = "1", cat_b = "1";
  int cat_n = 2, cat_m = 1, cat_k = 0;
  ChoppedParams chop;
  auto* catalog = app.add_subcommand("catalog", "Emit a generated polytope");
  catalog->add_option("name", cat_name,
                      "simplex|cube|cp_product|hirzebruch|pentagon|chopped")
      ->required();
  catalog->add_option("--n", cat_n, "dimension / first factor");
  catalog->add_option("--m", cat_m, "second factor dimension");
  catalog->add_option("--lambda", cat_lambda, "scale (rational)");
  catalog->add_option("--a", cat_a, "hirzebruch a (rational)");
  catalog->add_option("--b", cat_b, "hirzebruch b (rational)");
  catalog->add_option("--k", cat_k, "hirzebruch twist (integer >= 0)");
  catalog->add_option("--base", chop.base, "chopped: base catalog entry");
  catalog->add_option("--vertex", chop.vertex, "chopped: vertex index or x,y");
  catalog->add_option("--eps", chop.eps, "chopped: chop size (rational)");

  std::vector<std::string> ball_tokens;
  auto* render = app.add_subcommand("render", "Emit an SVG figure (dim 2)");
  render->add_option("--input", input, "polytope JSON file (default stdin)");
  render->add_option("--ball", ball_tokens,
                     "vertex_index t, repeatable, shades the ball image");

  auto* space = app.add_subcommand("embedding-space",
                                   "Describe the embedding space at radius r");
  space->add_option("--input", input, "polytope JSON file (default stdin)");
  space->add_option("--t", at_flag, "t = r^2 (rational)");
  space->add_option("--r", r_flag, "radius r (decimal)");
  space->add_flag("--open", open_mode, "open-ball semantics");

  CLI11_PARSE(app, argc, argv);
  BallMode mode = open_mode ? BallMode::Open : BallMode::Closed;

  try {
    if (validate->parsed()) {
      DelzantReport rep = validate_delzant(read_polytope(input));
      std::cout << report_to_json(rep).dump(2) << "\n";
      return rep.ok() ? kExitOk : kExitNotDelzant;
    }

    if (emb->parsed()) {
      Polytope p = read_polytope(input);
      StepFunction sf = emb_function(p);
      if (at_flag.empty() && r_flag.empty()) {
        std::cout << step_function_to_json(sf).dump(2) << "\n";
      } else {
        std::cout << emb_at(sf, radius_to_t(at_flag, r_flag), mode) << "\n";
      }
      return kExitOk;
    }

    if (catalog->parsed()) {
      Polytope p = make_catalog(cat_name, cat_n, cat_m, cat_lambda, cat_a,
                                cat_b, cat_k, chop);
      std::cout << polytope_to_json(p).dump(2) << "\n";
      return kExitOk;
    }

    if (render->parsed()) {
      Polytope p = read_polytope(input);
      if (ball_tokens.size() % 2 != 0)
        throw ParseError("--ball expects vertex_index t pairs");
      std::vector<BallOverlay> balls;
      for (size_t i = 0; i < ball_tokens.size(); i += 2)
        balls.push_back(
            {std::stoi(ball_tokens[i]), parse_rational(ball_tokens[i + 1])});
      std::cout << render_svg(p, balls);
      return kExitOk;
    }

    if (space->parsed()) {
      if (at_flag.empty() && r_flag.empty())
        throw ParseError("embedding-space needs --t or --r");
      Polytope p = read_polytope(input);
      EmbeddingSpaceDescriptor d =
          embedding_space(p, radius_to_t(at_flag, r_flag), mode);
      std::cout << descriptor_to_json(d, p).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const NotDelzant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotDelzant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
