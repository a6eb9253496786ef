#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "demazure/basis.hpp"
#include "demazure/errors.hpp"
#include "demazure/expr.hpp"
#include "demazure/polytope.hpp"
#include "demazure/products.hpp"
#include "demazure/ssaf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int cell_budget(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DEMAZURE_BUDGET_CELLS"))
        return std::atoi(env);
    return demazure::kDefaultCellBudget;
}

// Prints both computation routes and checks they agree; the fillings
// route is skipped past the cell budget.
int print_both_routes(const std::string& label, const demazure::WeakComposition& shape,
                      bool is_atom, int budget) {
    using namespace demazure;
    const Polynomial by_ops = is_atom ? atom_by_operators(shape) : key_by_operators(shape);
    std::cout << label << shape.to_string() << "\n";
    std::cout << "  operators: " << by_ops.to_string() << "\n";
    try {
        const Polynomial by_fillings =
            is_atom ? atom_by_fillings(shape, budget) : key_by_fillings(shape, budget);
        std::cout << "  fillings:  " << by_fillings.to_string() << "\n";
        if (by_fillings != by_ops) {
            std::cout << "  routes DISAGREE\n";
            return kExitCounterexample;
        }
        std::cout << "  routes agree\n";
    } catch (const BudgetExceeded& e) {
        std::cout << "  fillings:  skipped (" << e.what() << ")\n";
        return kExitBudget;
    }
    return kExitOk;
}

int write_report(const demazure::SweepReport& report, std::string out_prefix) {
    if (out_prefix.empty()) out_prefix = "sweep_" + report.kind;
    {
        std::ofstream csv(out_prefix + ".csv");
        if (!csv) throw std::runtime_error("cannot open " + out_prefix + ".csv");
        report.write_csv(csv);
    }
    {
        std::ofstream json(out_prefix + ".json");
        if (!json) throw std::runtime_error("cannot open " + out_prefix + ".json");
        report.write_json(json);
    }
    const int bad = report.counterexamples();
    std::cout << report.kind << ": " << report.records.size() << " cases, " << bad
              << " counterexamples (" << out_prefix << ".csv, " << out_prefix
              << ".json)\n";
    return bad == 0 ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
    using namespace demazure;
    CLI::App app{"Demazure atoms and key polynomials: exact computation, basis "
                 "expansion, positivity sweeps, and lattice plots"};
    app.require_subcommand(1);

    std::string shape_text, expr_text, basis = "atom", out_path, sweep_kind;
    int nvars = 0, budget_flag = 0, jobs = 1;
    int max_weight = 4, max_part = 3;

    CLI::App* cmd_atom = app.add_subcommand("atom", "print A_alpha by both routes");
    cmd_atom->add_option("shape", shape_text, "composition, e.g. \"(1,0,3)\"")->required();
    cmd_atom->add_option("--budget-cells", budget_flag, "SSAF enumeration cell budget");

    CLI::App* cmd_key = app.add_subcommand("key", "print kappa_gamma by both routes");
    cmd_key->add_option("shape", shape_text, "composition, e.g. \"(3,0,1)\"")->required();
    cmd_key->add_option("--budget-cells", budget_flag, "SSAF enumeration cell budget");

    CLI::App* cmd_expand = app.add_subcommand("expand", "expand a polynomial expression");
    cmd_expand->add_option("expr", expr_text, "expression, e.g. \"key (0,2) * key (1,0,2)\"")
        ->required();
    cmd_expand->add_option("--basis", basis, "atom or key")
        ->check(CLI::IsMember({"atom", "key"}));
    cmd_expand->add_option("--nvars", nvars, "number of variables for the index set");

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run a verification sweep");
    cmd_sweep->add_option("kind", sweep_kind, "thm413|thm415|thm418|conjecture|closedforms")
        ->required()
        ->check(CLI::IsMember({"thm413", "thm415", "thm418", "conjecture", "closedforms"}));
    cmd_sweep->add_option("--max", max_weight, "weight / grid bound (default 4)");
    cmd_sweep->add_option("--max-part", max_part, "entry bound for the conjecture sweep");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");
    cmd_sweep->add_option("--out", out_path, "output path prefix");

    CLI::App* cmd_polytope = app.add_subcommand("polytope", "emit the lattice cloud of an expression");
    cmd_polytope->add_option("expr", expr_text, "expression, e.g. \"pi:121 (4,1,0)\"")
        ->required();
    cmd_polytope->add_option("out", out_path, "output file (.csv or .svg)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_atom->parsed())
            return print_both_routes("A", WeakComposition::parse(shape_text), true,
                                     cell_budget(budget_flag));
        if (cmd_key->parsed())
            return print_both_routes("K", WeakComposition::parse(shape_text), false,
                                     cell_budget(budget_flag));
        if (cmd_expand->parsed()) {
            const Polynomial f = eval_expression(expr_text);
            if (basis == "atom")
                std::cout << expand_atoms(f, nvars).to_string() << "\n";
            else
                std::cout << expand_keys(f, nvars).to_string() << "\n";
            return kExitOk;
        }
        if (cmd_sweep->parsed()) {
            SweepReport report;
            if (sweep_kind == "thm413")
                report = sweep_thm413(max_weight, 3, jobs);
            else if (sweep_kind == "thm415")
                report = sweep_thm415(max_weight, 3, jobs);
            else if (sweep_kind == "thm418")
                report = sweep_thm418(max_weight, 3, jobs);
            else if (sweep_kind == "conjecture")
                report = sweep_conjecture(max_part, jobs);
            else
                report = sweep_closed_forms(max_weight, jobs);
            return write_report(report, out_path);
        }
        if (cmd_polytope->parsed()) {
            emit(cloud_of(eval_expression(expr_text)), out_path);
            std::cout << "wrote " << out_path << "\n";
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NegativeCoefficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
