// etrans: command-line front end for the E-transform library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "etrans/algebra.hpp"
#include "etrans/io.hpp"
#include "etrans/transform_cont.hpp"
#include "etrans/transform_disc.hpp"
#include "etrans/verify.hpp"

namespace {

using namespace etrans;

enum Exit { kOk = 0, kUsage = 1, kData = 2, kVerify = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Job {
  std::string group = "A2";
  std::string kind = "E";
  std::string label = "0,0";
  std::int64_t M = 4;
  int res = 16;
  std::string format = "csv";
  std::string output;
  std::string input;
  std::string groups;
  std::string Ms;
  std::string prefix;
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError(key + ": expected an integer, got '" + v + "'");
  }
}

// key=value lines; values here take precedence over command-line flags.
void apply_config(const std::string& path, Job& job) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(n) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "group") job.group = value;
    else if (key == "kind") job.kind = value;
    else if (key == "label") job.label = value;
    else if (key == "M") job.M = parse_int(key, value);
    else if (key == "res") job.res = static_cast<int>(parse_int(key, value));
    else if (key == "format") job.format = value;
    else if (key == "groups") job.groups = value;
    else if (key == "Ms") job.Ms = value;
    else throw UsageError(path + ":" + std::to_string(n) + ": unknown key '" + key + "'");
  }
}

GroupId group_of(const std::string& s) {
  try {
    return parse_group(s);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

Weight label_of(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("label must be written a,b");
  return {parse_int("label", trim(s.substr(0, comma))), parse_int("label", trim(s.substr(comma + 1)))};
}

OrbitKind kind_of(const std::string& s) {
  try {
    return parse_kind(s);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::int64_t> Ms_of(const std::string& s) {
  std::vector<std::int64_t> out;
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    auto lo = parse_int("M", trim(s.substr(0, dots))), hi = parse_int("M", trim(s.substr(dots + 2)));
    for (auto m = lo; m <= hi; ++m) out.push_back(m);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int("M", trim(item)));
  }
  if (out.empty()) throw UsageError("empty M range");
  for (auto m : out)
    if (m < 1) throw UsageError("M must be at least 1");
  return out;
}

void validate(const Job& job) {
  if (job.M < 1) throw UsageError("M must be at least 1");
  if (job.res < 2) throw UsageError("res must be at least 2");
  if (job.format != "csv" && job.format != "json") throw UsageError("format must be csv or json");
}

// Writes to the named file, or stdout when the name is empty.
template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  write(out);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

void write_table(std::ostream& out, const std::string& format, const std::vector<DomainPoint>& pts,
                 const std::vector<Complex>& vals) {
  if (format == "csv") {
    out << "x,y,re,im\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << format_double(pts[i].x) << "," << format_double(pts[i].y) << "," << format_double(vals[i].real()) << ","
          << format_double(vals[i].imag()) << "\n";
    return;
  }
  out << "[";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << (i ? ",\n  " : "\n  ") << "{\"x\": " << format_double(pts[i].x) << ", \"y\": " << format_double(pts[i].y)
        << ", \"re\": " << format_double(vals[i].real()) << ", \"im\": " << format_double(vals[i].imag()) << "}";
  out << "\n]\n";
}

std::vector<DomainPoint> dense_points(GroupId g, int res) {
  const auto& dom = fundamental_domain(g);
  std::vector<DomainPoint> pts;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j)
      pts.push_back(dom.map(static_cast<double>(i) / (res - 1), static_cast<double>(j) / (res - 1)));
  return pts;
}

int cmd_eval(const Job& job) {
  const GroupId g = group_of(job.group);
  const OrbitKind kind = kind_of(job.kind);
  const Weight l = label_of(job.label);
  auto pts = dense_points(g, job.res);
  std::vector<Complex> vals;
  for (const auto& x : pts) vals.push_back(eval_generic(g, kind, l, x));
  with_output(job.output, [&](std::ostream& out) { write_table(out, job.format, pts, vals); });
  return kOk;
}

int cmd_grid(const Job& job) {
  const GroupId g = group_of(job.group);
  Grid grid = build_grid(g, job.M);
  std::vector<Complex> vals(grid.size());
  if (!job.label.empty()) {
    OrbitSum f(g, kind_of(job.kind), label_of(job.label));
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid.point(i));
  }
  with_output(job.output, [&](std::ostream& out) { write_grid_data(out, make_grid_data(grid, vals)); });
  return kOk;
}

int cmd_transform(const Job& job) {
  auto in = open_input(job.input);
  GridData data = read_grid_data(in);
  DiscreteTransform T(data.group, data.M);
  auto f = align_to_grid(data, T.grid());
  Spectrum sp = T.forward(f);
  auto back = T.synthesize(sp);
  double residual = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) residual = std::max(residual, std::abs(back[i] - f[i]));
  with_output(job.output, [&](std::ostream& out) { write_spectrum(out, sp); });
  std::cerr << "residual " << format_double(residual) << "\n";
  return kOk;
}

int cmd_interpolate(const Job& job) {
  auto in = open_input(job.input);
  Spectrum sp = read_spectrum(in);
  Interpolant f(sp);
  auto pts = dense_points(sp.group, job.res);
  std::vector<Complex> vals;
  for (const auto& x : pts) vals.push_back(f(x));
  with_output(job.output, [&](std::ostream& out) { write_table(out, job.format, pts, vals); });
  return kOk;
}

int cmd_verify(const Job& job) {
  verify::Options o;
  if (!job.groups.empty()) {
    o.groups.clear();
    std::stringstream ss(job.groups);
    std::string item;
    while (std::getline(ss, item, ',')) o.groups.push_back(group_of(trim(item)));
  }
  o.Ms = Ms_of(job.Ms.empty() ? "2..6" : job.Ms);
  auto results = verify::run_all(o);
  nlohmann::json report = nlohmann::json::object();
  report["checks"] = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    report["checks"].push_back(verify::to_json(r));
    if (!r.passed && !r.documented_discrepancy) ok = false;
    std::cerr << (r.passed ? "PASS " : (r.documented_discrepancy ? "DOC  " : "FAIL ")) << r.id << " " << r.title
              << ": " << r.summary << "\n";
  }
  report["passed"] = ok;
  with_output(job.output, [&](std::ostream& out) { out << report.dump(2) << "\n"; });
  return ok ? kOk : kVerify;
}

int cmd_split(const Job& job) {
  auto in = open_input(job.input);
  GridData data = read_grid_data(in);
  DiscreteTransform T(data.group, data.M);
  auto f = align_to_grid(data, T.grid());
  auto parts = central_split(T.grid(), f);
  if (parts.size() == 1) std::cerr << "notice: the center of " << to_string(data.group) << " is trivial; passing the data through\n";
  const std::string prefix = job.prefix.empty() ? "component" : job.prefix;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Spectrum sp = T.forward(parts[j]);
    double purity = 0.0;
    for (std::size_t k = 0; k < sp.labels.size(); ++k)
      if (congruence_class(data.group, sp.labels[k]) != static_cast<int>(j))
        purity = std::max(purity, std::abs(sp.coeffs[k]));
    const std::string path = prefix + "_" + std::to_string(j) + ".json";
    with_output(path, [&](std::ostream& out) { write_grid_data(out, make_grid_data(T.grid(), parts[j])); });
    std::cout << path << " purity_residual " << format_double(purity) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete and continuous E-function transforms for A1xA1, A2, C2 and G2"};
  app.require_subcommand(1);
  Job job;
  std::string config;
  app.add_option("--config", config, "key=value file; its values override flags");

  auto common = [&](CLI::App* c, bool label, bool resolution) {
    c->add_option("-g,--group", job.group, "A1xA1, A2, C2 or G2");
    c->add_option("-o,--output", job.output, "output file (default stdout)");
    if (label) {
      c->add_option("-k,--kind", job.kind, "E, Xi, C or Omega");
      c->add_option("-l,--label", job.label, "weight a,b in the fundamental weight basis");
    }
    if (resolution) {
      c->add_option("-r,--res", job.res, "samples per direction of the dense evaluation grid");
      c->add_option("-f,--format", job.format, "csv or json");
    }
  };

  auto* eval = app.add_subcommand("eval", "evaluate an orbit function on a dense grid over F^e");
  common(eval, true, true);
  auto* grid = app.add_subcommand("grid", "write the grid F^e_M as a data file, optionally sampling a function");
  common(grid, true, false);
  grid->add_option("-M", job.M, "grid resolution");
  auto* transform = app.add_subcommand("transform", "discrete transform of grid data into a spectrum");
  transform->add_option("input", job.input, "grid data file")->required();
  transform->add_option("-o,--output", job.output, "spectrum file (default stdout)");
  auto* interp = app.add_subcommand("interpolate", "evaluate a spectrum on a dense grid over F^e");
  interp->add_option("input", job.input, "spectrum file")->required();
  interp->add_option("-o,--output", job.output, "output file (default stdout)");
  interp->add_option("-r,--res", job.res, "samples per direction");
  interp->add_option("-f,--format", job.format, "csv or json");
  auto* ver = app.add_subcommand("verify", "run the property and oracle checks");
  ver->add_option("--groups", job.groups, "comma-separated groups (default all)");
  ver->add_option("--M", job.Ms, "resolutions, lo..hi or a comma list (default 2..6)");
  ver->add_option("-o,--output", job.output, "report file (default stdout)");
  auto* split = app.add_subcommand("split", "central splitting of grid data into congruence components");
  split->add_option("input", job.input, "grid data file")->required();
  split->add_option("-p,--prefix", job.prefix, "output prefix; writes <prefix>_<j>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (grid->parsed() && grid->count("--label") == 0 && config.empty()) job.label.clear();
    if (!config.empty()) apply_config(config, job);
    validate(job);
    if (eval->parsed()) return cmd_eval(job);
    if (grid->parsed()) return cmd_grid(job);
    if (transform->parsed()) return cmd_transform(job);
    if (interp->parsed()) return cmd_interpolate(job);
    if (ver->parsed()) return cmd_verify(job);
    if (split->parsed()) return cmd_split(job);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
