// Command-line front end.
//
//   dupcat <analyze|verify|enumerate|emit-dot|export> --quiver FILE
//          [--cap N] [--out FILE] [--tilting-index K]

#include "dupcat/errors.hpp"
#include "dupcat/pipeline.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>

using namespace dupcat;

namespace {

enum Exit { Ok = 0, VerificationFailed = 1, BadInput = 2, RepresentationInfinite = 3 };

struct RunConfig {
    std::string command;
    std::string quiver;
    std::size_t cap = 10000;
    std::size_t max_dim = 64;
    std::string out;
    std::optional<std::size_t> tilting_index;
    std::string fault = "none";

    KnitOptions knit() const { return {cap, max_dim}; }
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f)
        throw Error("cannot write '" + cfg.out + "'");
    f << text;
}

int cmd_analyze(const RunConfig& cfg, const Quiver& q)
{
    auto type = classify_dynkin(q);
    std::cout << "quiver: " << q.num_vertices() << " vertices, " << q.num_arrows() << " arrows\n";
    std::cout << "type: " << type.name() << "\n";

    DuplicatedAlgebra d(q);
    std::cout << "dim Abar: " << d.algebra().dimension() << "\n\n" << duplicated_quiver(d).to_text() << "\n";

    try {
        auto ind_a = knit_ind_A(d.base(), cfg.knit());
        std::cout << "ind A: " << ind_a.size() << "\n";
        auto full = knit_ind_dup(d, cfg.knit());
        std::size_t pi = 0;
        for (std::size_t i = 0; i < full.size(); ++i)
            pi += full.projective[i] && full.injective[i];
        std::cout << "ind Abar: " << full.size() << " (" << pi << " projective-injective)\n";
    } catch (const CapExceeded& e) {
        std::cout << "representation-infinite: " << e.what() << "\n";
        std::cout << "Abar is not representation-finite, so the quiver is not of Dynkin type\n";
        return Ok;
    }
    if (!type.is_dynkin()) {
        std::cout << "left part: not computed (quiver is not of Dynkin type)\n";
        return Ok;
    }
    auto lp = left_part_catalog(d, cfg.knit());
    std::cout << "left part: " << lp.members.size() << " members, " << lp.non_proj_inj().size()
              << " not projective-injective\n";
    std::cout << "Sigma: " << lp.sigma().size() << " (";
    bool first = true;
    for (auto i : lp.sigma()) {
        std::cout << (first ? "" : ", ") << lp.members[i].name;
        first = false;
    }
    std::cout << ")\n";
    return Ok;
}

int cmd_verify(const RunConfig& cfg, const Quiver& q)
{
    static const std::map<std::string, Fault> faults{
        {"none", Fault::None}, {"drop-member", Fault::DropMember}, {"swap-cosyzygy", Fault::SwapCosyzygy}};
    Pipeline p(q, cfg.knit());
    Report r = verify_all(p, faults.at(cfg.fault));
    emit(cfg, cfg.out.empty() ? r.to_text() : r.to_json());
    if (!cfg.out.empty())
        std::cout << r.to_text();
    return r.ok() ? Ok : VerificationFailed;
}

int cmd_enumerate(const RunConfig& cfg, const Quiver& q)
{
    Pipeline p(q, cfg.knit());
    const auto& a = p.analysis;
    const auto& c = *p.cluster;
    auto b = verify_bijection(p.dup, a.left, c);

    std::cout << "type: " << classify_dynkin(q).name() << "\n";
    std::cout << "ind A: " << a.left.ind_a.size() << "\n";
    std::cout << "left part (not projective-injective): " << a.left.non_proj_inj().size() << "\n";
    std::cout << "L-tilting modules: " << a.tilting.size() << "\n";
    std::cout << "cluster-tilting objects: " << a.cluster_tilting.size() << "\n";
    std::cout << "expected: " << expected_count(classify_dynkin(q)).get_str() << "\n";
    std::cout << "bijection: " << (b.report.ok() ? "verified" : "FAILED") << "\n\n";
    for (std::size_t k = 0; k < a.tilting.size(); ++k) {
        std::cout << "  [" << k << "]";
        for (auto i : a.tilting[k].free_part)
            std::cout << "  " << a.left.members[i].name;
        std::cout << "   ->";
        for (auto o : b.images[k])
            std::cout << "  " << c.name(c.objects()[o]);
        std::cout << "\n";
    }
    if (!cfg.out.empty())
        emit(cfg, analysis_to_json(p.dup, c, a).dump(2) + "\n");
    return b.report.ok() ? Ok : VerificationFailed;
}

int cmd_emit_dot(const RunConfig& cfg, const Quiver& q)
{
    Pipeline p(q, cfg.knit());
    DotStyle style;
    style.tilting = cfg.tilting_index;
    emit(cfg, ar_quiver_dot(p.dup, p.analysis, style));
    return Ok;
}

int cmd_export(const RunConfig& cfg, const Quiver& q)
{
    Pipeline p(q, cfg.knit());
    emit(cfg, analysis_to_json(p.dup, *p.cluster, p.analysis).dump(2) + "\n");
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Duplicated algebras of Dynkin quivers, their left parts and cluster categories"};
    RunConfig cfg;
    app.add_option("command", cfg.command, "analyze, verify, enumerate, emit-dot or export")
        ->required()
        ->check(CLI::IsMember({"analyze", "verify", "enumerate", "emit-dot", "export"}));
    app.add_option("--quiver", cfg.quiver, "quiver file")->required();
    app.add_option("--cap", cfg.cap, "most indecomposables to knit")->check(CLI::PositiveNumber);
    app.add_option("--max-dim", cfg.max_dim, "largest module dimension to knit")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "output file");
    app.add_option("--tilting-index", cfg.tilting_index, "L-tilting module drawn with diamonds");
    app.add_option("--inject-fault", cfg.fault)
        ->group("")
        ->check(CLI::IsMember({"none", "drop-member", "swap-cosyzygy"}));
    CLI11_PARSE(app, argc, argv);

    try {
        Quiver q = load_quiver(cfg.quiver);
        if (cfg.command == "analyze")
            return cmd_analyze(cfg, q);
        if (cfg.command == "verify")
            return cmd_verify(cfg, q);
        if (cfg.command == "enumerate")
            return cmd_enumerate(cfg, q);
        if (cfg.command == "emit-dot")
            return cmd_emit_dot(cfg, q);
        return cmd_export(cfg, q);
    } catch (const CapExceeded& e) {
        std::cerr << "dupcat: representation-infinite: " << e.what() << "\n";
        return RepresentationInfinite;
    } catch (const Error& e) {
        std::cerr << "dupcat: " << e.what() << "\n";
        return BadInput;
    }
}
