#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hq/report.hpp"

namespace {

// Runs one report per algebra on up to `jobs` threads; order is preserved.
std::vector<hq::Json> fan_out(const std::string& command, const std::vector<std::string>& names,
                              const hq::CommandOptions& opt, int jobs) {
    std::vector<hq::Json> out(names.size());
    if (jobs <= 1 || names.size() <= 1) {
        for (size_t i = 0; i < names.size(); ++i) out[i] = hq::run_command(command, names[i], opt);
        return out;
    }
    hq::CommandOptions inner = opt;
    inner.jobs = 1;
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < names.size();) out[i] = hq::run_command(command, names[i], inner);
        });
    for (auto& th : pool) th.join();
    return out;
}

std::vector<std::string> expand(const std::string& command, const std::vector<std::string>& names) {
    if (names.size() != 1 || names[0] != "all") return names;
    std::vector<std::string> all;
    for (const auto& e : hq::catalog())
        if (hq::command_applies(command, e)) all.push_back(e.name);
    return all;
}

int export_text(const std::string& name, bool complex, int degree_bound) {
    try {
        hq::Algebra a = hq::load_algebra(name, degree_bound);
        if (complex) {
            if (!a.entry || !a.entry->homology) throw hq::Error("MethodMismatch", "no resolution is available for " + name);
            std::cout << hq::export_complex(hq::resolution(*a.entry, *a.presented), *a.presented);
        } else if (a.fd) {
            std::cout << hq::write_fd(*a.fd);
        } else {
            std::cout << hq::write_presentation(*a.presented);
        }
        return 0;
    } catch (const hq::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integrals, Nakayama automorphisms and twisted Hochschild (co)homology of Hopf algebras"};
    app.require_subcommand(1);

    hq::CommandOptions opt;
    std::vector<std::string> names;
    bool text = false;
    int jobs = 1;
    bool complex = false;

    auto common = [&](CLI::App* sub, bool takes_algebra) {
        if (takes_algebra)
            sub->add_option("algebra", names, "catalog names, presentation or structure-tensor files, or 'all'")
                ->required();
        sub->add_option("--degree-bound", opt.degree_bound, "completion and axiom degree bound")
            ->capture_default_str();
        sub->add_option("--truncate", opt.truncate, "largest internal degree N")->capture_default_str();
        sub->add_option("--window", opt.window, "stabilization window W")->capture_default_str();
        sub->add_option("--seed", opt.seed, "seed for randomized searches")->capture_default_str();
        sub->add_option("--jobs", jobs, "worker threads")->capture_default_str();
        sub->add_flag("--text,!--json", text, "human-readable output instead of JSON");
    };

    CLI::App* cat = app.add_subcommand("catalog", "list catalog entries");
    common(cat, false);
    CLI::App* ax = app.add_subcommand("axioms", "verify the Hopf axioms");
    common(ax, true);
    CLI::App* in = app.add_subcommand("integral", "integral character");
    common(in, true);
    in->add_option("--method", opt.method, "auto, descent, homology or both")
        ->check(CLI::IsMember({"auto", "descent", "homology", "both"}))
        ->capture_default_str();
    CLI::App* nk = app.add_subcommand("nakayama", "Nakayama automorphism");
    common(nk, true);
    nk->add_option("--method", opt.method, "integral method")
        ->check(CLI::IsMember({"auto", "descent", "homology", "both"}))
        ->capture_default_str();
    CLI::App* rf = app.add_subcommand("radford", "S^4 formula and bimodule identity (finite-dimensional)");
    common(rf, true);
    CLI::App* hh = app.add_subcommand("hochschild", "twisted Hochschild homology and cohomology");
    common(hh, true);
    CLI::App* du = app.add_subcommand("duality", "duality dimension tables");
    common(du, true);
    for (CLI::App* sub : {hh, du}) {
        sub->add_option("--twist", opt.twist, "identity, nakayama or custom-file")
            ->check(CLI::IsMember({"identity", "nakayama", "custom-file"}))
            ->capture_default_str();
        sub->add_option("--twist-file", opt.twist_file, "algebra map file for --twist custom-file")
            ->check(CLI::ExistingFile);
    }
    CLI::App* ex = app.add_subcommand("export", "print a presentation, structure tensors or a resolution");
    ex->add_option("algebra", names, "catalog name or file")->required()->expected(1);
    ex->add_option("--degree-bound", opt.degree_bound, "completion degree bound")->capture_default_str();
    ex->add_flag("--complex", complex, "print the resolution of k");

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (command == "export") return export_text(names.front(), complex, opt.degree_bound);
    if (command == "catalog") names = {""};
    opt.jobs = jobs;

    std::vector<hq::Json> reports = fan_out(command, expand(command, names), opt, jobs);
    int code = 0;
    for (const auto& r : reports) code = std::max(code, hq::exit_code(r));
    if (text) {
        for (const auto& r : reports) std::cout << hq::render_text(r);
    } else if (reports.size() == 1) {
        std::cout << hq::dump_report(reports.front());
    } else {
        std::cout << hq::dump_report(hq::Json(reports));
    }
    return code;
}
