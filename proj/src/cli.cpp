#include "posetrep/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetrep/dimension.hpp"
#include "posetrep/errors.hpp"
#include "posetrep/ff_oracle.hpp"
#include "posetrep/forms.hpp"
#include "posetrep/incidence.hpp"
#include "posetrep/poset_file.hpp"

namespace posetrep {

namespace {

using nlohmann::json;

struct Ctx {
  std::string file;
  std::string dim_name = "main";
  std::string vector_override;
  bool json_mode = false;
  bool recursive = false;
  bool trace = false;
  Int q = 0;
  Int claimed_dim = 0;
  std::string primes_csv;
  std::string x_label;
  Int count_budget = kDefaultCountBudget;
  Int summand_budget = kDefaultSummandBudget;
};

std::vector<std::string> order_labels(const Poset& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (int i : p.level_order()) out.push_back(p.labels()[static_cast<std::size_t>(i)]);
  return out;
}

json dim_vector_json(const DimVector& dims) {
  json alpha = json::object();
  for (const auto& [label, value] : dims.alpha) alpha[label] = value;
  return json{{"alpha0", dims.alpha0}, {"alpha", alpha}};
}

std::string dim_vector_text(const Poset& p, const DimVector& dims) {
  std::ostringstream out;
  out << dims.alpha0 << " ;";
  for (const auto& label : p.labels()) out << ' ' << label << ':' << dims.alpha.at(label);
  return out.str();
}

std::vector<Int> parse_prime_list(const std::string& csv) {
  std::vector<Int> primes;
  std::size_t i = 0;
  while (i <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', i), csv.size());
    std::string piece = csv.substr(i, comma - i);
    piece.erase(0, piece.find_first_not_of(' '));
    piece.erase(piece.find_last_not_of(' ') + 1);
    Int value = 0;
    const char* begin = piece.data();
    const char* end = begin + piece.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (piece.empty() || ec != std::errc() || ptr != end) {
      throw InputError("cannot parse prime list '" + csv + "'");
    }
    primes.push_back(value);
    i = comma + 1;
  }
  return primes;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Runner {
  Ctx& ctx;
  std::ostream& out;

  PosetFile load() const { return load_poset_file(ctx.file); }

  DimVector pick_dims(const PosetFile& file) const {
    if (!ctx.vector_override.empty()) return parse_dim_payload(ctx.vector_override, file.poset);
    const DimVector* dims = file.find_dims(ctx.dim_name);
    if (!dims) {
      throw InputError("no dimension vector named '" + ctx.dim_name + "' in '" + ctx.file + "'");
    }
    return *dims;
  }

  void matrix_report(const IntMatrix& m, const Poset& p) const {
    if (ctx.json_mode) {
      emit(out, json{{"order", order_labels(p)}, {"rows", m.to_rows()}});
    } else {
      out << m.to_text();
    }
  }

  void validate() const {
    const PosetFile file = load();
    std::vector<std::string> names;
    for (const auto& [name, dims] : file.dims) names.push_back(name);
    if (ctx.json_mode) {
      emit(out, json{{"ok", true},
                     {"elements", file.poset.size()},
                     {"height", file.poset.height()},
                     {"dims", names}});
      return;
    }
    out << "ok: " << file.poset.size() << " elements, height " << file.poset.height()
        << ", dims:";
    if (names.empty()) {
      out << " none";
    } else {
      for (const auto& name : names) out << ' ' << name;
    }
    out << '\n';
  }

  void levels() const {
    const PosetFile file = load();
    const auto partition = file.poset.level_partition();
    const int height = file.poset.height();
    if (ctx.json_mode) {
      json levels = json::array();
      for (std::size_t i = 0; i < partition.size(); ++i) {
        levels.push_back(json{{"level", height - static_cast<int>(i)}, {"elements", partition[i]}});
      }
      emit(out, json{{"height", height}, {"levels", levels}});
      return;
    }
    for (std::size_t i = 0; i < partition.size(); ++i) {
      out << "level " << height - static_cast<int>(i) << ':';
      for (const auto& label : partition[i]) out << ' ' << label;
      out << '\n';
    }
  }

  void factors() const {
    const PosetFile file = load();
    const auto factor_list = frobenius_factors(file.poset);
    if (ctx.json_mode) {
      json factors = json::array();
      for (std::size_t i = 0; i < factor_list.size(); ++i) {
        factors.push_back(json{{"level", i + 1},
                               {"rows", factor_list[i].first.to_rows()},
                               {"inverse_rows", factor_list[i].second.to_rows()}});
      }
      emit(out, json{{"order", order_labels(file.poset)}, {"factors", factors}});
      return;
    }
    for (std::size_t i = 0; i < factor_list.size(); ++i) {
      if (i > 0) out << '\n';
      out << "F" << i + 1 << ":\n" << factor_list[i].first.to_text();
    }
  }

  void forms_report(const char* lead) const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const Int q = euler_form(file.poset, dims);
    const CoordVector coords = coordinate_vector(file.poset, dims);
    const Admissibility adm = is_admissible(file.poset, dims);
    if (ctx.json_mode) {
      json c = json::object();
      for (const auto& [label, value] : coords) c[label] = value;
      emit(out, json{{"Q", q}, {"c", c}, {"admissible", adm.admissible}, {"violations", adm.violations}});
      return;
    }
    const std::string which(lead);
    if (which == "euler") {
      out << "Q = " << q << '\n';
    } else if (which == "coordinate") {
      for (const auto& label : file.poset.labels()) {
        out << "c[" << label << "] = " << coords.at(label) << '\n';
      }
    } else {  // admissible
      if (adm.admissible) {
        out << "admissible\n";
      } else {
        out << "not admissible: " << adm.violations.front() << '\n';
        for (std::size_t i = 1; i < adm.violations.size(); ++i) {
          out << "also: " << adm.violations[i] << '\n';
        }
      }
    }
  }

  void tits() const {
    const PosetFile file = load();
    const DimVector beta = pick_dims(file);
    const Int value = tits_form(file.poset, beta);
    if (ctx.json_mode) {
      emit(out, json{{"Q_hat", value}});
    } else {
      out << "Q^ = " << value << '\n';
    }
  }

  void iterate() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const IterationTrace trace = iteration_sequence(file.poset, dims);
    if (ctx.json_mode) {
      emit(out, json{{"order", trace.order}, {"iterates", trace.iterates}});
      return;
    }
    out << "order:";
    for (const auto& label : trace.order) out << ' ' << label;
    out << '\n';
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
      out << "alpha(" << k + 1 << "):";
      for (Int v : trace.iterates[k]) out << ' ' << v;
      out << '\n';
    }
  }

  void dim() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const DimReport report =
        ctx.recursive ? variety_dim_recursive(file.poset, dims) : variety_dim(file.poset, dims);
    if (ctx.json_mode) {
      if (ctx.recursive) {
        json steps = json::array();
        for (const auto& step : report.trace) {
          steps.push_back(json{{"x", step.x},
                               {"X", step.sum_dim},
                               {"fiber", json::array({step.fiber_k, step.fiber_n})},
                               {"fiber_dim", step.fiber_dim}});
        }
        emit(out, json{{"steps", steps}, {"dim", report.dim_variety}, {"Q", report.q_value}});
      } else {
        emit(out, json{{"dim", report.dim_variety}, {"Q", report.q_value}, {"gl_dim", report.gl_dim}});
      }
      return;
    }
    out << "dim R = " << report.dim_variety << ", Q = " << report.q_value
        << ", dim GL = " << report.gl_dim << '\n';
    if (ctx.recursive && ctx.trace) {
      for (const auto& step : report.trace) {
        out << "peel " << step.x << ": X = " << step.sum_dim << ", fiber Gr(" << step.fiber_k
            << ", " << step.fiber_n << "), fiber dim = " << step.fiber_dim << '\n';
      }
    }
  }

  void sum_dim() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const Int value = generic_sum_dim(file.poset, dims);
    if (ctx.json_mode) {
      emit(out, json{{"sum_dim", value}});
    } else {
      out << "sum dim = " << value << '\n';
    }
  }

  void lemma2_check() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const Int defect = lemma2_defect(file.poset, ctx.x_label, dims);
    if (ctx.json_mode) {
      emit(out, json{{"x", ctx.x_label}, {"defect", defect}});
    } else {
      out << "defect = " << defect << '\n';
    }
  }

  void summand_scan_cmd() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const ScanReport report = summand_scan(file.poset, dims, ctx.summand_budget);
    if (ctx.json_mode) {
      json doc{{"verdict", report.pass ? "PASS" : "FAIL"}};
      if (!report.pass) {
        doc["witness"] = dim_vector_json(*report.witness);
        doc["witness_Q"] = report.witness_q;
      }
      emit(out, doc);
      return;
    }
    if (report.pass) {
      out << "PASS\n";
    } else {
      out << "FAIL: witness " << dim_vector_text(file.poset, *report.witness) << " with Q = "
          << report.witness_q << '\n';
    }
  }

  void count() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const Int value = count_points(file.poset, dims, ctx.q, ctx.count_budget);
    if (ctx.json_mode) {
      emit(out, json{{"q", ctx.q}, {"count", value}});
    } else {
      out << value << '\n';
    }
  }

  void fit_dim() const {
    const PosetFile file = load();
    const DimVector dims = pick_dims(file);
    const FitReport report =
        fit_dimension(file.poset, dims, parse_prime_list(ctx.primes_csv), ctx.claimed_dim,
                      ctx.count_budget);
    if (ctx.json_mode) {
      json counts = json::object();
      for (const auto& [prime, value] : report.counts) counts[std::to_string(prime)] = value;
      emit(out, json{{"counts", counts},
                     {"poly", report.poly},
                     {"verdict", report.verdict},
                     {"claimed_dim", report.claimed_dim}});
      return;
    }
    for (const auto& [prime, value] : report.counts) out << "q=" << prime << ": " << value << '\n';
    out << "poly:";
    for (const auto& coeff : report.poly) out << ' ' << coeff;
    out << '\n';
    out << "verdict: " << report.verdict << " (degree " << report.fitted_degree << ")\n";
    if (!report.residuals.empty()) {
      out << "residuals:";
      for (const auto& [prime, residual] : report.residuals) {
        out << " q=" << prime << ":" << residual;
      }
      out << '\n';
    }
    out << "note: " << report.note << '\n';
  }

  void dot(bool dim_requested) const {
    const PosetFile file = load();
    const DimVector* dims = nullptr;
    DimVector chosen;
    if (!ctx.vector_override.empty() || dim_requested || file.find_dims(ctx.dim_name)) {
      chosen = pick_dims(file);
      dims = &chosen;
    }
    out << dot_export(file.poset, dims);
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  Runner run{ctx, out};

  CLI::App app{"Exact computations for subspace representations of finite posets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help covering every subcommand");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", ctx.file, "poset file")->required();
    sub->add_flag("--json", ctx.json_mode, "emit a JSON report");
    return sub;
  };
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--dim", ctx.dim_name, "dimension vector name (default: main)");
    sub->add_option("--vector", ctx.vector_override,
                    "inline dimension vector 'a0 ; l:v ...' (negative entries allowed)");
    return sub;
  };

  add_common(app.add_subcommand("validate", "parse and validate a poset file"))
      ->callback([&] { run.validate(); });
  add_common(app.add_subcommand("levels", "print the level partition, top level first"))
      ->callback([&] { run.levels(); });
  add_common(app.add_subcommand("incidence", "incidence matrix in level order"))
      ->callback([&] {
        const PosetFile file = run.load();
        run.matrix_report(incidence_matrix(file.poset), file.poset);
      });
  add_common(app.add_subcommand("inverse", "inverse incidence matrix via the strip factorization"))
      ->callback([&] {
        const PosetFile file = run.load();
        run.matrix_report(incidence_inverse(file.poset), file.poset);
      });
  add_common(app.add_subcommand("mobius", "Mobius matrix via the recursive definition"))
      ->callback([&] {
        const PosetFile file = run.load();
        run.matrix_report(mobius_matrix(file.poset), file.poset);
      });
  add_common(app.add_subcommand("factors", "unipotent strip factors of the incidence matrix"))
      ->callback([&] { run.factors(); });

  add_dims(add_common(app.add_subcommand("euler", "Euler form value Q of the dimension vector")))
      ->callback([&] { run.forms_report("euler"); });
  add_dims(add_common(app.add_subcommand("tits", "Tits form value of the vector read as (b0; b)")))
      ->callback([&] { run.tits(); });
  add_dims(add_common(
               app.add_subcommand("coordinate", "coordinate vector c with sum_{t<=s} c_t = alpha_s")))
      ->callback([&] { run.forms_report("coordinate"); });
  add_dims(add_common(app.add_subcommand("admissible", "admissibility check with certificates")))
      ->callback([&] { run.forms_report("admissible"); });
  add_dims(add_common(app.add_subcommand("iterate", "level-by-level iteration down to c")))
      ->callback([&] { run.iterate(); });

  CLI::App* dim_cmd = add_dims(add_common(
      app.add_subcommand("dim", "dimension of the representation variety (admissible vectors)")));
  dim_cmd->add_flag("--recursive", ctx.recursive, "use the peeling recursion instead of the closed form");
  dim_cmd->add_flag("--trace", ctx.trace, "print each peeling step");
  dim_cmd->callback([&] { run.dim(); });

  add_dims(add_common(app.add_subcommand(
               "sum-dim", "generic dimension of the sum of all subspaces")))
      ->callback([&] { run.sum_dim(); });

  CLI::App* lemma_cmd = add_dims(add_common(app.add_subcommand(
      "lemma2-check", "defect of the one-step peeling identity at a maximal element")));
  lemma_cmd->add_option("--x", ctx.x_label, "maximal element to peel")->required();
  lemma_cmd->callback([&] { run.lemma2_check(); });

  CLI::App* scan_cmd = add_dims(add_common(app.add_subcommand(
      "summand-scan", "scan all summands for a non-positive Euler value")));
  scan_cmd->add_option("--budget", ctx.summand_budget, "summand search-space budget");
  scan_cmd->callback([&] { run.summand_scan_cmd(); });

  CLI::App* count_cmd = add_dims(add_common(
      app.add_subcommand("count", "number of points of the variety over F_q")));
  count_cmd->add_option("--q", ctx.q, "field size (prime, at most 23)")->required();
  count_cmd->add_option("--budget", ctx.count_budget, "enumeration budget in bases");
  count_cmd->callback([&] { run.count(); });

  CLI::App* fit_cmd = add_dims(add_common(app.add_subcommand(
      "fit-dim", "interpolate point counts and test a claimed dimension")));
  fit_cmd->add_option("--primes", ctx.primes_csv, "comma-separated primes, e.g. 2,3,5")->required();
  fit_cmd->add_option("--claimed-dim", ctx.claimed_dim, "dimension the counts should certify")
      ->required();
  fit_cmd->add_option("--budget", ctx.count_budget, "enumeration budget in bases");
  fit_cmd->callback([&] { run.fit_dim(); });

  CLI::App* dot_cmd = add_common(app.add_subcommand("dot", "Graphviz DOT of the cover relations"));
  CLI::Option* dot_dim_opt = dot_cmd->add_option("--dim", ctx.dim_name, "dimension vector name");
  dot_cmd->add_option("--vector", ctx.vector_override, "inline dimension vector");
  dot_cmd->callback([&] { run.dot(dot_dim_opt->count() > 0); });

  std::vector<std::string> argv(args);
  try {
    std::reverse(argv.begin(), argv.end());  // CLI11 consumes the vector back to front
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
  return 0;
}

}  // namespace posetrep
