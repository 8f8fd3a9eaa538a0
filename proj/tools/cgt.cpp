#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgt/compound.hpp"
#include "cgt/expr.hpp"
#include "cgt/game_core.hpp"
#include "cgt/oracle.hpp"
#include "cgt/parse.hpp"
#include "cgt/rulesets.hpp"

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::size_t node_cap = 10'000'000;
    std::string format = "text";  // "text" or "machine"

    bool machine() const { return format == "machine"; }
};

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

std::string vset_csv(const cgt::NatSet& v) {
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t x : v) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    return os.str();
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = std::stoull(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void emit(const GlobalOpts& g, const std::string& key,
          const std::string& value) {
    if (g.machine())
        std::cout << key << '=' << value << '\n';
    else
        std::cout << key << ": " << value << '\n';
}

int run_eval(const GlobalOpts& g, const std::string& expr_text,
             const std::string& show) {
    cgt::ExprPtr e = cgt::parse(expr_text);
    bool want_vset = show.find("vset") != std::string::npos;
    bool want_grundy = show.find("grundy") != std::string::npos;
    bool want_outcome = show.find("outcome") != std::string::npos;
    if (!want_vset && !want_grundy && !want_outcome)
        want_vset = want_grundy = want_outcome = true;
    cgt::NatSet v = cgt::vset_of(e);
    if (want_vset)
        emit(g, "vset", g.machine() ? vset_csv(v) : cgt::to_string(v));
    if (want_grundy) emit(g, "grundy", std::to_string(cgt::mex(v)));
    if (want_outcome)
        emit(g, "outcome", cgt::to_string(cgt::outcome_of(e)));
    return 0;
}

int run_check(const GlobalOpts& g, std::uint64_t count,
              std::uint64_t max_birthday, std::uint64_t max_depth,
              std::uint64_t max_nimber) {
    cgt::GenConfig cfg;
    cfg.max_birthday = max_birthday;
    cfg.max_expr_depth = max_depth;
    cfg.max_nimber = max_nimber;
    cfg.seed = g.seed;
    cgt::GameArena arena(g.node_cap);
    std::mt19937_64 rng(cfg.seed);
    std::uint64_t passed = 0, failed = 0, skipped = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        cgt::ExprPtr e = cgt::random_expr(cfg, rng);
        try {
            cgt::GameId ground = cgt::expand(arena, e);
            bool ok = cgt::vset_of(e, &arena) == arena.vset(ground) &&
                      cgt::grundy_of(e, &arena) == arena.grundy(ground) &&
                      cgt::outcome_of(e, &arena) == arena.outcome(ground);
            if (ok) {
                ++passed;
            } else {
                ++failed;
                std::cerr << "counterexample: " << cgt::render(e) << '\n';
            }
        } catch (const cgt::ResourceLimitError& ex) {
            ++skipped;
            std::cerr << "skipped infeasible trial " << i << ": " << ex.what()
                      << '\n';
        }
    }
    std::cout << passed << " passed, " << failed << " failed";
    if (skipped) std::cout << ", " << skipped << " skipped";
    std::cout << '\n';
    return failed == 0 ? 0 : 1;
}

int run_chain(const GlobalOpts& g, const std::string& a_text,
              const std::string& ahat_text) {
    cgt::ChainSpec c{parse_u64_list(a_text), parse_u64_list(ahat_text)};
    c.validate();
    std::vector<long long> sigma = cgt::chain_suffix_sums(c);
    std::ostringstream os;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) os << ',';
        os << sigma[i];
    }
    emit(g, "sigma", os.str());
    emit(g, "p", std::to_string(cgt::chain_p(c)));
    emit(g, "grundy", std::to_string(cgt::chain_grundy(c)));
    return 0;
}

int run_tokens(const GlobalOpts& g, const std::string& perm_text) {
    cgt::TokenRowState s{parse_u64_list(perm_text)};
    s.validate();
    const std::vector<int> b = cgt::token_b_sequence(s);
    std::vector<std::uint64_t> records, bseq;
    for (int bit : b) {
        records.push_back(bit == 0 ? 1 : 0);
        bseq.push_back(static_cast<std::uint64_t>(bit));
    }
    emit(g, "records", join_u64(records));
    emit(g, "b", join_u64(bseq));
    const std::uint64_t value = cgt::token_grundy(s);
    emit(g, "grundy", std::to_string(value));
    if (s.perm.size() <= 8) {
        bool ok = cgt::token_grundy_retrograde(s) == value &&
                  cgt::chain_grundy(cgt::token_chain(s)) == value;
        emit(g, "retrograde", ok ? "ok" : "MISMATCH");
        if (!ok) return 1;
    } else {
        emit(g, "retrograde", "skipped");
    }
    return 0;
}

int run_poset(const GlobalOpts& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return 1;
    }
    cgt::PosetGame p = cgt::PosetGame::load(in);
    cgt::GameArena arena(g.node_cap);
    std::uint64_t value = p.grundy(arena);
    emit(g, "grundy", std::to_string(value));
    emit(g, "outcome", value == 0 ? "P" : "N");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impartial-game calculator: variation sets, Grundy numbers "
                 "and outcomes of sums, ordinal sums and ordinal sums with "
                 "substitution"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.fallthrough();  // accept the global options after a subcommand too
    app.add_option("--seed", g.seed, "Seed for all randomized commands");
    app.add_option("--node-cap", g.node_cap,
                   "Maximum number of interned game nodes");
    app.add_option("--format", g.format, "Output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* eval = app.add_subcommand("eval", "Evaluate a game expression");
    std::string expr_text, show;
    eval->add_option("expr", expr_text, "Expression, e.g. \"*2 + *3 :[*1] *4\"")
        ->required();
    eval->add_option("--show", show,
                     "Comma-separated subset of vset,grundy,outcome");

    auto* check = app.add_subcommand(
        "check", "Cross-check the formula layer against brute-force expansion");
    std::uint64_t count = 500, max_birthday = 4, max_depth = 4, max_nimber = 4;
    check->add_option("--count", count, "Number of random trials");
    check->add_option("--max-birthday", max_birthday,
                      "Birthday bound for random games");
    check->add_option("--max-depth", max_depth,
                      "Depth bound for random expressions");
    check->add_option("--max-nimber", max_nimber,
                      "Largest nimber leaf in random expressions");

    auto* chain = app.add_subcommand(
        "chain", "Grundy number of a chain of nimbers by the closed form");
    std::string a_text, ahat_text;
    chain->add_option("--a", a_text, "Comma-separated a_0..a_n")->required();
    chain->add_option("--ahat", ahat_text, "Comma-separated ahat_1..ahat_n");

    auto* tokens = app.add_subcommand("tokens", "Analyze a token-row position");
    std::string perm_text;
    tokens->add_option("perm", perm_text, "Permutation of 0..n-1, e.g. 2,0,1")
        ->required();

    auto* poset = app.add_subcommand("poset", "Evaluate a poset-game file");
    std::string poset_path;
    poset->add_option("file", poset_path, "Poset description file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(g, expr_text, show);
        if (check->parsed())
            return run_check(g, count, max_birthday, max_depth, max_nimber);
        if (chain->parsed()) return run_chain(g, a_text, ahat_text);
        if (tokens->parsed()) return run_tokens(g, perm_text);
        if (poset->parsed()) return run_poset(g, poset_path);
    } catch (const cgt::ParseError& ex) {
        std::cerr << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
