#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "torlink/int_matrix.hpp"
#include "torlink/linking.hpp"
#include "torlink/search.hpp"
#include "torlink/tripleform.hpp"

using json = nlohmann::ordered_json;
using namespace torlink;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

IntMatrix builtin_m0() {
    IntMatrix m = IntMatrix::Zero(6, 6);
    for (int i = 0; i < 3; ++i) {
        m(i, i) = 3;
        m(i + 3, i + 3) = -3;
    }
    return m;
}

IntMatrix load_framing(const std::string& file, bool builtin) {
    if (builtin) return builtin_m0();
    return read_framing_matrix_file(file);
}

json gram_to_json(const LinkingForm& form) {
    json rows = json::array();
    for (const auto& row : form.gram) {
        json r = json::array();
        for (const QmodZ& q : row) r.push_back(q.str());
        rows.push_back(r);
    }
    return rows;
}

json factors_to_json(const TorsionGroup& g) {
    json f = json::array();
    for (const Int& d : g.invariant_factors) f.push_back(d.str());
    return f;
}

json basis_to_json(const Subspace& s) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < s.basis.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < s.basis.cols(); ++j) r.push_back(s.basis(i, j));
        rows.push_back(r);
    }
    return rows;
}

void emit(const json& j, bool text, const std::string& text_body) {
    if (text)
        std::cout << text_body << "\n";
    else
        std::cout << j.dump() << "\n";
}

int cmd_linking_form(const std::string& file, const std::string& convention,
                     bool text) {
    IntMatrix m = read_framing_matrix_file(file);
    SignConvention conv = convention == "lemma" ? SignConvention::lemma
                                                : SignConvention::paper;
    LinkingForm form = linking_form_from_framing(m, conv);
    json out;
    out["invariant_factors"] = factors_to_json(form.group);
    out["gram"] = gram_to_json(form);
    out["convention"] = convention;

    std::ostringstream body;
    body << "invariant factors:";
    for (const Int& d : form.group.invariant_factors) body << " " << d;
    body << "\ngram matrix (Q/Z):";
    for (const auto& row : form.gram) {
        body << "\n ";
        for (const QmodZ& q : row) body << " " << q.str();
    }
    emit(out, text, body.str());
    return kExitOk;
}

int cmd_census(const std::string& file, bool builtin, bool text) {
    LinkingForm form = linking_form_from_framing(load_framing(file, builtin));
    std::vector<Subspace> lagrangians = enumerate_lagrangians(form);
    auto pairs = dual_pair_indices(lagrangians);

    json out;
    out["lagrangians"] = lagrangians.size();
    bool m0_shape = !lagrangians.empty() && lagrangians.front().p == 3 &&
                    lagrangians.front().ambient_dim == 6;
    size_t nonsingular = 0;
    if (m0_shape) {
        for (const Subspace& l : lagrangians)
            if (determinant_vector(l)[0] != 0) ++nonsingular;
        out["left_block_nonsingular"] = nonsingular;
        out["left_block_singular"] = lagrangians.size() - nonsingular;
    }
    out["dual_pairs"] = pairs.size();

    std::ostringstream body;
    body << "lagrangians: " << lagrangians.size();
    if (m0_shape)
        body << "\nleft 3x3 block nonsingular: " << nonsingular
             << "\nleft 3x3 block singular: " << lagrangians.size() - nonsingular;
    body << "\ndual pairs: " << pairs.size();
    emit(out, text, body.str());
    return kExitOk;
}

int cmd_obstructed(const std::string& vec, bool text) {
    ObstructionVector v = ObstructionVector::parse(vec);
    SearchContext ctx = SearchContext::build(linking_form_from_framing(builtin_m0()));
    SearchReport report = is_obstructed(v, ctx);

    json out;
    json ventries = json::array();
    for (uint8_t e : v.entries) ventries.push_back(static_cast<int>(e));
    out["v"] = ventries;
    out["obstructed"] = report.obstructed;
    if (report.failing_pair)
        out["failing_pair"] = {report.failing_pair->first, report.failing_pair->second};
    else
        out["failing_pair"] = nullptr;

    std::ostringstream body;
    body << "obstructed: " << (report.obstructed ? "true" : "false");
    if (report.failing_pair)
        body << "\nfailing pair: (" << report.failing_pair->first << ", "
             << report.failing_pair->second << ")";
    emit(out, text, body.str());
    return report.obstructed ? kExitOk : kExitNegative;
}

int cmd_verify_universal(const std::string& mode, int threads, bool text) {
    SearchContext ctx = SearchContext::build(linking_form_from_framing(builtin_m0()));
    VanishingMode m = mode == "exhaustive" ? VanishingMode::exhaustive
                                           : VanishingMode::rank_reduced;
    UniversalVanishingReport report = verify_universal_vanishing(ctx, m, threads);

    json out;
    out["verdict"] = report.holds;
    out["mode"] = mode;
    out["rank"] = report.rank;
    out["vectors_tested"] = report.vectors_tested;
    out["elapsed_seconds"] = report.wall_seconds;

    std::ostringstream body;
    body << "verdict: " << (report.holds ? "true" : "false") << "\nmode: " << mode
         << "\nrank: " << report.rank << "\nvectors tested: " << report.vectors_tested
         << "\nelapsed: " << report.wall_seconds << " s";
    emit(out, text, body.str());
    return report.holds ? kExitOk : kExitNegative;
}

std::vector<long long> parse_list(const std::string& csv) {
    std::vector<long long> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

int cmd_grope(long long t, long long g, const std::string& cy, const std::string& dz,
              const std::string& cz, const std::string& dy, bool text) {
    GropeData data;
    data.t = t;
    data.cy = parse_list(cy);
    data.dz = parse_list(dz);
    data.cz = parse_list(cz);
    data.dy = parse_list(dy);
    if (static_cast<long long>(data.cy.size()) != g)
        throw std::invalid_argument("grope: list lengths must equal g");
    data.validate();

    Rat representative = triple_linking_rational(data);
    QmodZ residue = triple_linking_from_grope(data);

    json out;
    out["rational"] = numerator(representative).str() + "/" +
                      denominator(representative).str();
    out["residue"] = residue.str();

    std::ostringstream body;
    body << "rational representative: " << representative
         << "\nresidue mod 1: " << residue.str();
    emit(out, text, body.str());
    return kExitOk;
}

int cmd_hantzsche(const std::string& file, bool text) {
    LinkingForm form = linking_form_from_framing(read_framing_matrix_file(file));
    HantzscheResult result = check_hantzsche(form);

    json out;
    out["order"] = form.group.order().str();
    std::ostringstream body;
    int code = kExitOk;
    switch (result.status) {
        case HantzscheStatus::no_square_order:
            out["status"] = "no_square_order";
            body << "order " << form.group.order()
                 << " not a square: no embedding splitting";
            code = kExitNegative;
            break;
        case HantzscheStatus::splitting:
            out["status"] = "splitting";
            out["first"] = basis_to_json(result.splitting->first);
            out["second"] = basis_to_json(result.splitting->second);
            body << "splitting found\nfirst basis: "
                 << out["first"].dump() << "\nsecond basis: " << out["second"].dump();
            break;
        case HantzscheStatus::no_splitting_found:
            out["status"] = "no_splitting_found";
            body << "square order but no dual pair of Lagrangians exists";
            code = kExitNegative;
            break;
        case HantzscheStatus::square_order_only:
            out["status"] = "square_order_only";
            body << "square order; splitting search unsupported for this group";
            break;
    }
    emit(out, text, body.str());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion linking forms, Lagrangian censuses and the (Z/3)^20 "
                 "obstruction search"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string file, convention = "paper", vec, mode = "rank";
    bool builtin = false;
    int threads = 1;
    long long t = 1, g = 0;
    std::string cy, dz, cz, dy;

    auto* lf = app.add_subcommand("linking-form",
                                  "invariant factors and gram matrix of a framing");
    lf->add_option("framing_file", file)->required();
    lf->add_option("--convention", convention)
        ->check(CLI::IsMember({"paper", "lemma"}));

    auto* census = app.add_subcommand("census", "Lagrangian and dual-pair census");
    std::string builtin_name;
    census->add_option("framing_file", file);
    census->add_option("--builtin", builtin_name, "built-in framing (m0)")
        ->check(CLI::IsMember({"m0"}));

    auto* obstructed = app.add_subcommand("obstructed",
                                          "test a coefficient vector on the m0 census");
    obstructed->add_option("--v", vec, "20 comma-separated trits")->required();

    auto* universal = app.add_subcommand(
        "verify-universal", "check that every vector vanishes on some Lagrangian");
    universal->add_option("--mode", mode)->check(CLI::IsMember({"rank", "exhaustive"}));
    universal->add_option("--threads", threads);

    auto* grope = app.add_subcommand("grope", "evaluate the grope intersection sum");
    grope->add_option("--t", t)->required();
    grope->add_option("--g", g)->required();
    grope->add_option("--cy", cy);
    grope->add_option("--dz", dz);
    grope->add_option("--cz", cz);
    grope->add_option("--dy", dy);

    auto* hantzsche = app.add_subcommand("hantzsche", "square-order and splitting test");
    hantzsche->add_option("framing_file", file)->required();

    for (CLI::App* sub : {lf, census, obstructed, universal, grope, hantzsche})
        sub->fallthrough();  // lets --format appear after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitOk;
    }

    const bool text = format == "text";
    try {
        if (lf->parsed()) return cmd_linking_form(file, convention, text);
        if (census->parsed()) {
            builtin = builtin_name == "m0";
            if (!builtin && file.empty())
                throw std::invalid_argument("census: need a framing file or --builtin");
            return cmd_census(file, builtin, text);
        }
        if (obstructed->parsed()) return cmd_obstructed(vec, text);
        if (universal->parsed()) return cmd_verify_universal(mode, threads, text);
        if (grope->parsed()) return cmd_grope(t, g, cy, dz, cz, dy, text);
        if (hantzsche->parsed()) return cmd_hantzsche(file, text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
