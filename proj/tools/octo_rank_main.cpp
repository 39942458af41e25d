// octo-rank: builds exact octonion algebras, materializes their invariant
// families of skew-symmetric forms, and verifies every rank, dimension and
// invariance claim by exact linear algebra.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "octorank/json_io.hpp"
#include "octorank/verify.hpp"

namespace {

using namespace octorank;

struct TargetOptions {
    std::string field = "Q";
    std::string algebra = "division-fano";
    std::string space = "C0";
    std::string out;
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
};

void add_target_flags(CLI::App& cmd, TargetOptions& opt, bool with_space = true) {
    cmd.add_option("--field", opt.field, "Scalar field: Q or Fp:<prime>")->capture_default_str();
    cmd.add_option("--algebra", opt.algebra,
                   "Algebra: split-zorn, division-fano or cayley-dickson:<g1>,<g2>,<g3>")
        ->capture_default_str();
    if (with_space) {
        cmd.add_option("--space", opt.space, "Form space: C0 (7x7) or C (8x8)")
            ->check(CLI::IsMember({"C0", "C"}))
            ->capture_default_str();
    }
}

std::shared_ptr<const OctonionAlgebra> build_target(const TargetOptions& opt) {
    const FieldSpec field = FieldSpec::parse(opt.field);
    return OctonionAlgebra::build(field, AlgebraDescriptor::parse(opt.algebra, field));
}

SpaceTag space_of_option(const TargetOptions& opt) {
    return opt.space == "C" ? SpaceTag::OnC : SpaceTag::OnC0;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    file << payload;
    if (!file.good()) throw Error("write to '" + path + "' failed");
}

int cmd_basis_matrices(const TargetOptions& opt) {
    const FormFamily family = FormFamily::build(build_target(opt), space_of_option(opt));
    write_output(opt.out, export_basis_matrices(family));
    return 0;
}

int cmd_census(const TargetOptions& opt) {
    const FormFamily family = FormFamily::build(build_target(opt), space_of_option(opt));
    const CensusResult census = rank_census(family);
    write_output(opt.out, export_census(census, family));
    return 0;
}

int cmd_kernel(const TargetOptions& opt) {
    const auto eval_map =
        FormEvaluationMap::build(FormFamily::build(build_target(opt), space_of_option(opt)));
    Rng rng(opt.seed);
    write_output(opt.out, export_kernel(eval_map, rng, opt.samples));
    return 0;
}

int cmd_audit(const TargetOptions& opt, std::size_t autos, std::size_t derivs) {
    const auto algebra = build_target(opt);
    Rng rng(opt.seed);
    std::vector<AlgebraMap> maps = sample_automorphisms(algebra, autos, rng);
    const std::size_t autos_found = maps.size();
    std::size_t derivs_found = 0;
    for (std::size_t attempts = 0; derivs_found < derivs && attempts < 20 * derivs + 20;
         ++attempts) {
        const AlgebraMap d =
            derivation_from_pair(algebra->random_element(rng), algebra->random_element(rng));
        if (!d.on_algebra().is_zero()) {
            maps.push_back(d);
            ++derivs_found;
        }
    }

    const FormFamily family = FormFamily::build(algebra, SpaceTag::OnC0);
    const InvarianceReport report = invariance_audit(family, maps, rng, opt.samples);

    std::printf("audit of %s over %s\n", algebra->spec_string().c_str(),
                algebra->field().to_string().c_str());
    std::printf("  automorphisms tested       %zu (requested %zu)\n", autos_found, autos);
    std::printf("  derivations tested         %zu (requested %zu)\n", derivs_found, derivs);
    std::printf("  derivation triples         %zu\n", report.derivation_triples);
    auto line = [](const char* label, std::size_t failures) {
        std::printf("  %-26s %s\n", label, failures == 0 ? "pass" : "FAIL");
    };
    line("equivariance", report.equivariance_failures);
    line("family span (pure)", report.pure_span_failures);
    line("family span (full)", report.full_span_failures);
    line("kernel invariance", report.kernel_invariance_failures);
    line("isometry", report.isometry_failures);
    line("derivation identity", report.derivation_identity_failures);
    std::printf("%s\n", report.all_passed() ? "AUDIT PASS" : "AUDIT FAIL");
    return report.all_passed() ? 0 : 1;
}

int cmd_verify_all(const RunConfig& config, const std::string& out) {
    const Report report = verify_all(config);
    std::cout << report_to_text(report);
    if (!out.empty()) write_output(out, report_to_json(report, config));
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octonion algebras and their invariant families of skew forms"};
    app.require_subcommand(1);

    TargetOptions basis_opt, census_opt, kernel_opt, audit_opt;
    std::size_t autos = 20, derivs = 50;
    RunConfig verify_config;
    std::string verify_out;

    CLI::App* basis = app.add_subcommand(
        "basis-matrices", "Export the seven generator matrices of the form family");
    add_target_flags(*basis, basis_opt);
    basis->add_option("--out", basis_opt.out, "Output path (stdout when omitted)");

    CLI::App* census = app.add_subcommand(
        "census", "Exhaustive rank census of the family span over a finite field");
    add_target_flags(*census, census_opt);
    census->add_option("--out", census_opt.out, "Output path (stdout when omitted)");

    CLI::App* kernel = app.add_subcommand(
        "kernel", "Export the kernel of the form evaluation map with a rank audit");
    add_target_flags(*kernel, kernel_opt);
    kernel->add_option("--out", kernel_opt.out, "Output path (stdout when omitted)");
    kernel->add_option("--seed", kernel_opt.seed, "Audit seed")->capture_default_str();
    kernel->add_option("--samples", kernel_opt.samples, "Audit sample count")
        ->capture_default_str();

    CLI::App* audit = app.add_subcommand(
        "audit", "Invariance audit with witness automorphisms and derivations");
    add_target_flags(*audit, audit_opt, /*with_space=*/false);
    audit->add_option("--autos", autos, "Automorphism count")->capture_default_str();
    audit->add_option("--derivs", derivs, "Derivation count")->capture_default_str();
    audit->add_option("--seed", audit_opt.seed, "Random seed")->capture_default_str();
    audit->add_option("--samples", audit_opt.samples, "Triples per derivation")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify-all", "Run the complete verification suite and report per-claim results");
    verify->add_option("--seed", verify_config.seed, "Random seed")->capture_default_str();
    verify->add_option("--samples", verify_config.base_samples,
                       "Base sample count for randomized audits")
        ->capture_default_str();
    verify->add_option("--out", verify_out, "Write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) return cmd_basis_matrices(basis_opt);
        if (census->parsed()) return cmd_census(census_opt);
        if (kernel->parsed()) return cmd_kernel(kernel_opt);
        if (audit->parsed()) return cmd_audit(audit_opt, autos, derivs);
        if (verify->parsed()) return cmd_verify_all(verify_config, verify_out);
    } catch (const octorank::Error& e) {
        std::cerr << "octo-rank: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
