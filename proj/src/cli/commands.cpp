#include "mvse/cli/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvse/bmdist/bmdist.hpp"
#include "mvse/cli/selftest.hpp"
#include "mvse/core/errors.hpp"
#include "mvse/io/svg.hpp"
#include "mvse/mvse/hexagon.hpp"
#include "mvse/tiling/tiling.hpp"
#include "mvse/tumat/tumat.hpp"
#include "mvse/zonotope/polygon.hpp"

namespace mvse::cli {

namespace {

using io::Json;

struct Context {
  std::istream& in;
  std::string format = "json";
};

std::string read_source(const std::string& path, Context& ctx) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cli", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Matrix read_matrix(const std::string& path, Context& ctx) {
  const std::string text = read_source(path, ctx);
  if (ctx.format == "csv") return io::matrix_from_csv(text);
  return io::matrix_from_json(io::parse(text));
}

Zonotope read_zonotope(const std::string& path, Context& ctx) {
  const std::string text = read_source(path, ctx);
  if (ctx.format == "csv") {
    const Matrix rows = io::matrix_from_csv(text);
    return Zonotope::from_columns(rows.transpose());
  }
  return io::zonotope_from_json(io::parse(text));
}

Lattice read_lattice(const std::string& path, Context& ctx) {
  const std::string text = read_source(path, ctx);
  if (ctx.format == "csv") return Lattice::make(io::matrix_from_csv(text));
  return io::lattice_from_json(io::parse(text));
}

PolyhedralSpace read_space(const std::string& path, Context& ctx) {
  return PolyhedralSpace::make(read_matrix(path, ctx));
}

// Projection files are plain matrix JSON or {"space": path, "projection": matrix}.
struct ProjectionFile {
  Matrix coeffs;
  std::string space_path;
};

ProjectionFile read_projection_file(const std::string& path, Context& ctx) {
  const std::string text = read_source(path, ctx);
  if (ctx.format == "csv") return {io::matrix_from_csv(text), {}};
  const Json j = io::parse(text);
  if (j.is_object() && j.contains("projection")) {
    ProjectionFile out{io::matrix_from_json(j.at("projection")), {}};
    if (j.contains("space") && j.at("space").is_string()) {
      std::filesystem::path ref = j.at("space").get<std::string>();
      if (ref.is_relative() && !path.empty() && path != "-") ref = std::filesystem::path(path).parent_path() / ref;
      out.space_path = ref.string();
    }
    return out;
  }
  return {io::matrix_from_json(j), {}};
}

Projection bind_projection(const std::string& space_path, const std::string& proj_path, Context& ctx,
                           std::optional<PolyhedralSpace>& space_out) {
  ProjectionFile pf = read_projection_file(proj_path, ctx);
  const std::string path = space_path.empty() ? pf.space_path : space_path;
  if (path.empty()) throw PreconditionError("cli", "no space given (use --space or a projection file with \"space\")");
  space_out = read_space(path, ctx);
  return Projection::make(*space_out, std::move(pf.coeffs));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cli", "cannot write '" + path + "'");
  out << content;
}

CommandResult ok(Json payload) { return {Status::ok, std::move(payload), 0, {}}; }

CommandResult refused(Json payload) {
  Json out{{"status", "refused"}};
  for (auto& [k, v] : payload.items()) out[k] = v;
  return {Status::refused, std::move(out), 2, {}};
}

CommandResult error(const std::string& module, const std::string& kind, const std::string& message) {
  return {Status::error, Json{{"status", "error"}, {"module", module}, {"kind", kind}, {"message", message}}, 1, {}};
}

Subset parse_subset_arg(const std::string& text) {
  Subset s;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    long v = 0;
    try {
      v = std::stol(cell);
    } catch (const std::exception&) {
      throw ParseError("cli", "subset entries must be integers: '" + text + "'");
    }
    if (v < 1) throw ParseError("cli", "subset indices are 1-based");
    s.push_back(static_cast<Index>(v - 1));
  }
  return s;
}

Json projection_payload(const PolyhedralSpace& space, const Projection& p, const std::string& space_path) {
  Json out;
  if (!space_path.empty()) out["space"] = space_path;
  out["projection"] = io::matrix_to_json(p.coeffs());
  out["ratio"] = io::to_json(volume_ratio(space, p));
  out["image"] = io::zonotope_to_json(p.image());
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Context ctx{in};
  CLI::App app{"Exact minimal-volume enlargement, zonotope and tiling toolkit", "mvse-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Matrix ingestion format")->check(CLI::IsMember({"json", "csv"}));

  std::string input, space_path, proj_path, zono_path, lattice_path, z1_path, z2_path, svg_path, subset_text,
      radius_text, mutation;
  std::uint64_t seed = 1;
  std::size_t restarts = 8, samples = 1000;

  std::function<CommandResult()> action;

  auto* plucker_cmd = app.add_subcommand("plucker", "Maximal minors of a matrix");
  plucker_cmd->add_option("input", input, "matrix file (default: stdin)");
  plucker_cmd->callback([&] {
    action = [&] { return ok(io::plucker_to_json(plucker(read_matrix(input, ctx)))); };
  });

  auto* tu = app.add_subcommand("tu", "Total unimodularity");
  tu->require_subcommand(1);
  auto* tu_check = tu->add_subcommand("check", "Brute-force TU test");
  tu_check->add_option("input", input);
  tu_check->callback([&] {
    action = [&] {
      const Matrix m = read_matrix(input, ctx);
      if (auto v = tu_violation(m)) {
        return refused(Json{{"tu", false},
                            {"violation", Json{{"rows", io::subset_to_json(v->rows)},
                                               {"cols", io::subset_to_json(v->cols)},
                                               {"det", io::to_json(v->det)}}}});
      }
      return ok(Json{{"tu", true}});
    };
  });
  auto* tu_cert = tu->add_subcommand("certificate", "Gomory (d+2)-column certificate for a non-TU matrix");
  tu_cert->add_option("input", input);
  tu_cert->callback([&] {
    action = [&] {
      const Matrix m = read_matrix(input, ctx);
      return ok(io::gomory_to_json(gomory_certificate(m), m));
    };
  });

  auto* td = app.add_subcommand("td", "Membership in the TU-spanned zonotope class");
  td->require_subcommand(1);
  auto* td_member = td->add_subcommand("member", "Membership witness or refusal");
  td_member->add_option("input", input, "zonotope file");
  td_member->callback([&] {
    action = [&] {
      const auto result = td_membership(read_zonotope(input, ctx));
      if (const auto* w = std::get_if<TUWitness>(&result)) {
        return ok(Json{{"member", true}, {"witness", io::witness_to_json(*w)}});
      }
      return refused(Json{{"member", false}, {"refusal", io::refusal_to_json(std::get<Refusal>(result))}});
    };
  });

  auto* zono = app.add_subcommand("zonotope", "Zonotope queries");
  zono->require_subcommand(1);
  auto* z_volume = zono->add_subcommand("volume", "Exact volume");
  z_volume->add_option("input", input);
  z_volume->callback([&] {
    action = [&] { return ok(Json{{"volume", io::to_json(volume(read_zonotope(input, ctx)))}}); };
  });
  auto* z_vertices = zono->add_subcommand("vertices", "Counterclockwise vertices (d = 2)");
  z_vertices->add_option("input", input);
  z_vertices->add_option("--svg", svg_path, "also write an SVG outline");
  z_vertices->callback([&] {
    action = [&] {
      const Zonotope z = read_zonotope(input, ctx);
      Json verts = Json::array();
      for (const auto& v : vertices2d(z)) verts.push_back(io::to_json(v));
      if (!svg_path.empty()) write_file(svg_path, io::zonotope_svg(z));
      return ok(Json{{"vertices", std::move(verts)}, {"hexagon", to_string(classify_hexagon(z).kind)}});
    };
  });
  auto* z_svg = zono->add_subcommand("svg", "Write an SVG outline (d = 2)");
  z_svg->add_option("input", input);
  z_svg->add_option("--svg", svg_path, "output path")->required();
  z_svg->callback([&] {
    action = [&] {
      write_file(svg_path, io::zonotope_svg(read_zonotope(input, ctx)));
      return ok(Json{{"svg", svg_path}});
    };
  });

  auto* mv = app.add_subcommand("mvse", "Minimal-volume sufficient enlargements");
  mv->require_subcommand(1);
  auto* mv_volume = mv->add_subcommand("volume", "MVSE volume in Y-basis coordinates");
  mv_volume->add_option("--space", space_path)->required();
  mv_volume->callback([&] {
    action = [&] {
      const auto space = read_space(space_path, ctx);
      return ok(Json{{"mvse_volume", io::to_json(mvse_volume(space))},
                     {"max_minor", io::to_json(space.minors().max_abs())}});
    };
  });
  auto* mv_enum = mv->add_subcommand("enumerate", "Coordinate subsets whose projections are parallelepiped MVSEs");
  mv_enum->add_option("--space", space_path)->required();
  mv_enum->callback([&] {
    action = [&] {
      const auto space = read_space(space_path, ctx);
      Json subs = Json::array();
      for (const auto& s : enumerate_parallelepiped_mvse(space)) subs.push_back(io::subset_to_json(s));
      return ok(Json{{"max_minor", io::to_json(space.minors().max_abs())}, {"subsets", std::move(subs)}});
    };
  });
  auto* mv_ratio = mv->add_subcommand("ratio", "Volume ratio of a projection image to the MVSE");
  mv_ratio->add_option("--space", space_path);
  mv_ratio->add_option("--proj", proj_path)->required();
  mv_ratio->callback([&] {
    action = [&] {
      std::optional<PolyhedralSpace> space;
      const Projection p = bind_projection(space_path, proj_path, ctx, space);
      return ok(Json{{"ratio", io::to_json(volume_ratio(*space, p))}});
    };
  });
  auto* mv_search = mv->add_subcommand("search", "Heuristic search for a small volume ratio");
  mv_search->add_option("--space", space_path)->required();
  mv_search->add_option("--restarts", restarts);
  mv_search->add_option("--seed", seed);
  mv_search->callback([&] {
    action = [&] {
      const auto space = read_space(space_path, ctx);
      const auto res = minimize_ratio_search(space, restarts, seed);
      return ok(Json{{"ratio", io::to_json(res.ratio)},
                     {"from_coordinate", res.from_coordinate},
                     {"evaluations", res.evaluations},
                     {"projection", io::matrix_to_json(res.best.coeffs())}});
    };
  });

  auto* proj = app.add_subcommand("project", "Construct projections onto a space");
  proj->require_subcommand(1);
  auto* p_coord = proj->add_subcommand("coordinate", "Projection along the coordinates outside a subset");
  p_coord->add_option("--space", space_path)->required();
  p_coord->add_option("--subset", subset_text, "1-based comma-separated rows, e.g. 1,2")->required();
  p_coord->callback([&] {
    action = [&] {
      const auto space = read_space(space_path, ctx);
      const auto p = coordinate_projection(space, parse_subset_arg(subset_text));
      return ok(projection_payload(space, p, space_path));
    };
  });
  auto* p_random = proj->add_subcommand("random", "Seeded random projection");
  p_random->add_option("--space", space_path)->required();
  p_random->add_option("--seed", seed);
  p_random->callback([&] {
    action = [&] {
      const auto space = read_space(space_path, ctx);
      return ok(projection_payload(space, random_projection(space, seed), space_path));
    };
  });

  auto* hex = app.add_subcommand("hexfind", "Hexagonal 2D subspace from a non-parallelepiped MVSE");
  hex->add_option("--space", space_path);
  hex->add_option("--proj", proj_path, "witness projection (searched for when omitted)");
  hex->callback([&] {
    action = [&] {
      std::optional<PolyhedralSpace> space;
      std::optional<Projection> witness;
      if (!proj_path.empty()) {
        witness = bind_projection(space_path, proj_path, ctx, space);
      } else {
        if (space_path.empty()) throw PreconditionError("cli", "hexfind needs --space");
        space = read_space(space_path, ctx);
        witness = find_hexagon_witness(*space);
        if (!witness) {
          return refused(Json{{"reason", "no minimal projection with a non-parallelepiped image was found"},
                              {"parallelepiped_mvse", [&] {
                                 Json subs = Json::array();
                                 for (const auto& s : enumerate_parallelepiped_mvse(*space))
                                   subs.push_back(io::subset_to_json(s));
                                 return subs;
                               }()}});
        }
      }
      Json out = io::hexagon_report_to_json(hexagonal_subspace(*space, *witness));
      out["witness"] = io::matrix_to_json(witness->coeffs());
      return ok(std::move(out));
    };
  });

  auto* tile = app.add_subcommand("tile", "Lattice tilings by zonotopes");
  tile->require_subcommand(1);
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "retained samples");
    cmd->add_option("--radius", radius_text, "sampling cube half-width (rational)");
    cmd->add_option("--seed", seed);
  };
  auto budget = [&] {
    SearchBudget b;
    b.samples = samples;
    b.seed = seed;
    if (!radius_text.empty()) b.radius = parse_rational(radius_text);
    return b;
  };
  auto* t_verify = tile->add_subcommand("verify", "Sampled exact-cover check");
  t_verify->add_option("--zonotope", zono_path)->required();
  t_verify->add_option("--lattice", lattice_path)->required();
  t_verify->add_option("--svg", svg_path);
  add_sampling(t_verify);
  t_verify->callback([&] {
    action = [&] {
      const Zonotope z = read_zonotope(zono_path, ctx);
      const Lattice l = read_lattice(lattice_path, ctx);
      const Rational radius = radius_text.empty() ? default_radius(z) : parse_rational(radius_text);
      const bool det_ok = det_volume_check(z, l);
      const TileVerdict v = tile_verify(z, l, radius, samples, seed);
      if (!svg_path.empty()) write_file(svg_path, io::tiling_svg(z, l, radius));
      Json out{{"det_volume_check", det_ok},
               {"lattice_determinant", io::to_json(l.determinant())},
               {"volume", io::to_json(volume(z))},
               {"verdict", io::verdict_to_json(v)}};
      return v.passed ? ok(std::move(out)) : refused(std::move(out));
    };
  });
  auto* t_search = tile->add_subcommand("search", "Search a tiling lattice");
  t_search->add_option("--zonotope", zono_path)->required();
  t_search->add_option("--svg", svg_path);
  add_sampling(t_search);
  t_search->callback([&] {
    action = [&] {
      const Zonotope z = read_zonotope(zono_path, ctx);
      const auto found = lattice_search(z, budget());
      if (!found) return refused(Json{{"lattice", nullptr}, {"reason", "no lattice found within the search budget"}});
      if (!svg_path.empty()) {
        write_file(svg_path, io::tiling_svg(z, *found, radius_text.empty() ? default_radius(z) : parse_rational(radius_text)));
      }
      return ok(Json{{"lattice", io::lattice_to_json(*found)}});
    };
  });
  auto* t_pipe = tile->add_subcommand("pipeline", "Membership test followed by lattice search and verification");
  t_pipe->add_option("--zonotope", zono_path)->required();
  add_sampling(t_pipe);
  t_pipe->callback([&] {
    action = [&] {
      const Zonotope z = read_zonotope(zono_path, ctx);
      const TilingReport r = td_tiling_pipeline(z, budget());
      Json out{{"member", r.member()}, {"tiles", r.tiles()}, {"det_volume_check", r.det_volume_ok}};
      if (const auto* w = std::get_if<TUWitness>(&r.membership)) {
        out["witness"] = io::witness_to_json(*w);
      } else {
        out["refusal"] = io::refusal_to_json(std::get<Refusal>(r.membership));
      }
      out["lattice"] = r.lattice ? io::lattice_to_json(*r.lattice) : Json(nullptr);
      if (r.verdict) out["verdict"] = io::verdict_to_json(*r.verdict);
      return r.member() && r.tiles() ? ok(std::move(out)) : refused(std::move(out));
    };
  });

  auto* bm = app.add_subcommand("bm", "Banach-Mazur distance bounds");
  bm->require_subcommand(1);
  auto* bm_bound = bm->add_subcommand("bound", "Support-ratio product bound at the given position");
  bm_bound->add_option("--z1", z1_path)->required();
  bm_bound->add_option("--z2", z2_path)->required();
  bm_bound->add_option("--seed", seed);
  bm_bound->callback([&] {
    action = [&] {
      return ok(io::bm_to_json(bm_upper_bound(read_zonotope(z1_path, ctx), read_zonotope(z2_path, ctx), seed)));
    };
  });

  auto* self = app.add_subcommand("selftest", "Run the bundled example and invariant corpus");
  SelftestOptions st;
  self->add_option("--seed", st.seed);
  self->add_option("--mutate", st.mutation, "swap in a corrupted routine")->check(CLI::IsMember(selftest_mutations()));
  self->callback([&] {
    action = [&] {
      const SelftestReport report = run_selftest(st);
      Json checks = Json::array();
      std::size_t failed = 0;
      Json first_failure = nullptr;
      for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
        if (!c.passed) {
          ++failed;
          if (first_failure.is_null()) first_failure = Json{{"name", c.name}, {"counterexample", c.detail}};
        }
      }
      Json payload{{"passed", report.checks.size() - failed}, {"failed", failed}, {"checks", std::move(checks)}};
      if (!first_failure.is_null()) payload["first_failure"] = std::move(first_failure);
      CommandResult r{failed == 0 ? Status::ok : Status::error, std::move(payload), failed == 0 ? 0 : 1,
                      report.table()};
      return r;
    };
  });

  std::vector<std::string> argv_store{"mvse-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {Status::ok, Json::object(), 0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {Status::ok, Json::object(), 0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return error("cli", "usage", e.what());
  }

  try {
    if (!action) return error("cli", "usage", "no command given");
    return action();
  } catch (const Error& e) {
    return error(e.module(), e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error("io", "parse", e.what());
  }
}

void print(const CommandResult& result, std::ostream& out) {
  if (!result.text.empty()) out << result.text;
  if (!result.payload.empty() || result.text.empty()) out << result.payload.dump(2) << '\n';
}

}  // namespace mvse::cli
