#include "altpath/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "altpath/io.hpp"
#include "altpath/partition.hpp"
#include "altpath/path.hpp"
#include "altpath/verify.hpp"

namespace altpath {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& name) {
  std::ifstream in(name, std::ios::binary);
  if (!in) throw InputError("cannot read " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& target, const std::string& text, std::ostream& out) {
  if (target.empty()) {
    out << text;
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw InputError("cannot write " + target);
  file << text;
}

Partition solve_partition(const Instance& inst) {
  return partition::plane_partition(inst.polygon_points(), inst.blue, inst.exterior_red());
}

ConvexRegion instance_box(const Instance& inst) {
  return partition::ambient_box(inst.polygon_points(), inst.blue, inst.exterior_red());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-crossing alternating paths on red/blue point sets"};
  app.require_subcommand(1);

  io::GenParams gen;
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--s", gen.s, "Polygon size")->required();
  gen_cmd->add_option("--blue", gen.n_blue, "Number of blue points")->required();
  gen_cmd->add_option("--red-out", gen.n_red_outside, "Number of red points outside the polygon");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--range", gen.coordinate_range, "Coordinates lie in [-range, range]");
  gen_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string instance_file, path_file, partition_file;
  std::uint64_t seed = 0;
  bool want_closed = false, want_open = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an alternating Hamiltonian path or cycle");
  solve_cmd->add_option("instance", instance_file)->required();
  auto* seed_opt = solve_cmd->add_option("--seed", seed, "Seed for the auxiliary point of the open case");
  auto* closed_flag = solve_cmd->add_flag("--closed", want_closed, "Require a closed cycle");
  solve_cmd->add_flag("--open", want_open, "Require an open path")->excludes(closed_flag);
  solve_cmd->add_option("-o,--output", output);

  auto* part_cmd = app.add_subcommand("partition", "Compute the convex partition with one diagonal per polygon edge");
  part_cmd->add_option("instance", instance_file)->required();
  part_cmd->add_option("-o,--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Check a path and/or partition against an instance");
  verify_cmd->add_option("instance", instance_file)->required();
  auto* vpath = verify_cmd->add_option("--path", path_file);
  auto* vpart = verify_cmd->add_option("--partition", partition_file);

  bool oracle_closed = false, oracle_open = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search on a tiny instance");
  oracle_cmd->add_option("instance", instance_file)->required();
  auto* oclosed = oracle_cmd->add_flag("--closed", oracle_closed);
  oracle_cmd->add_flag("--open", oracle_open)->excludes(oclosed);
  oracle_cmd->add_option("-o,--output", output);

  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  render_cmd->add_option("instance", instance_file)->required();
  render_cmd->add_option("--path", path_file);
  render_cmd->add_option("--partition", partition_file);
  render_cmd->add_option("-o,--output", output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  // Everything up to loading the inputs counts as invalid input; after that,
  // a failure of the solver on a validated instance is an internal breach.
  bool loaded = false;
  try {
    if (gen_cmd->parsed()) {
      io::check_params(gen);
      const Instance inst = io::generate(gen);
      write_output(output, io::emit_instance(io::InstanceFile{inst, gen.seed, {}}), out);
      return kExitOk;
    }

    const io::InstanceFile file = io::parse_instance_file(read_file(instance_file));
    const Instance& inst = file.instance;

    if (solve_cmd->parsed()) {
      const bool equal = inst.red.size() == inst.blue.size();
      if (want_closed && !equal) throw InputError("a closed cycle needs as many reds as blues");
      if (want_open && equal) throw InputError("an open path needs class sizes differing by one");
      const std::uint64_t s = seed_opt->count() ? seed : file.seed.value_or(0);
      loaded = true;
      write_output(output, io::emit_path(solve(inst, s)), out);
      return kExitOk;
    }
    if (part_cmd->parsed()) {
      if (inst.red.size() != inst.blue.size()) throw InputError("partition needs as many reds as blues");
      loaded = true;
      write_output(output, io::emit_partition(instance_box(inst), solve_partition(inst)), out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (!vpath->count() && !vpart->count()) throw InputError("give --path and/or --partition");
      bool all_ok = true;
      if (vpath->count()) {
        const AltPath path = io::parse_path(read_file(path_file));
        const Verdict v = verify_path(inst.all_points(), path);
        out << "path: " << (v ? v->describe() : "ok") << "\n";
        all_ok = all_ok && !v;
      }
      if (vpart->count()) {
        const io::PartitionFile pf = io::parse_partition(read_file(partition_file));
        const ConvexRegion box = instance_box(inst);
        Verdict v;
        if (!(pf.ambient == box)) {
          v = ViolationReport(ViolationKind::CoverageGap, "ambient region differs from the instance bounding box");
        } else {
          const std::vector<int> want(inst.polygon.size(), 1);
          v = verify_partition(box, inst.polygon_points(), inst.exterior_red(), inst.blue, pf.partition, want);
        }
        out << "partition: " << (v ? v->describe() : "ok") << "\n";
        all_ok = all_ok && !v;
      }
      return all_ok ? kExitOk : kExitVerifyFailed;
    }
    if (oracle_cmd->parsed()) {
      const bool closed = oracle_closed || (!oracle_open && inst.red.size() == inst.blue.size());
      const auto found = brute_force_path(inst.red, inst.blue, closed);
      write_output(output, found ? io::emit_path(*found) : "none\n", out);
      return kExitOk;
    }
    if (render_cmd->parsed()) {
      std::optional<AltPath> path;
      std::optional<io::PartitionFile> pf;
      if (!path_file.empty()) path = io::parse_path(read_file(path_file));
      if (!partition_file.empty()) pf = io::parse_partition(read_file(partition_file));
      write_output(output, io::render_svg(inst, path ? &*path : nullptr, pf ? &pf->partition : nullptr), out);
      return kExitOk;
    }
  } catch (const partition::PartitionError& e) {
    const bool input = !loaded && e.kind() == partition::ErrorKind::HypothesisViolated;
    err << "error: " << e.what() << "\n";
    return input ? kExitInvalidInput : kExitInternal;
  } catch (const PathError& e) {
    err << "error: " << e.what() << "\n";
    return loaded ? kExitInternal : kExitInvalidInput;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const io::InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return loaded ? kExitInternal : kExitInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const io::GenerationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace altpath
