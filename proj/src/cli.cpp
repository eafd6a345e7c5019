#include "sigma_roots/cli.hpp"

#include "sigma_roots/errors.hpp"
#include "sigma_roots/genetic.hpp"
#include "sigma_roots/io.hpp"
#include "sigma_roots/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace sigma_roots {

namespace {

using io::json;

struct Invocation {
    std::string quiver_path;
    std::string quiver_inline;
    std::string lambda;
    std::string alpha;
    std::string bound;
    std::string type;
    std::string graph_path;
    std::string graph_inline;
    std::string seed = "minimal";
    int refine_threshold = 0;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
    bool oracle = false;
    bool refine = false;
    bool all = false;
};

unsigned thread_hint()
{
    const char* env = std::getenv("SIGMA_ROOTS_THREADS");
    if (!env)
        return 1;
    char* end = nullptr;
    auto n = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || n == 0)
        return 1;
    return static_cast<unsigned>(std::min<unsigned long>(n, 64));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Quiver load_quiver(const Invocation& inv)
{
    if (!inv.quiver_path.empty() && !inv.quiver_inline.empty())
        throw ParseError("give either --quiver or --quiver-inline, not both");
    if (!inv.quiver_path.empty())
        return io::parse_quiver(read_file(inv.quiver_path));
    if (!inv.quiver_inline.empty())
        return io::parse_quiver_inline(inv.quiver_inline);
    throw ParseError("a quiver is required (--quiver PATH or --quiver-inline TEXT)");
}

Weight load_weight(const Invocation& inv, const Quiver& q)
{
    return inv.lambda.empty() ? Weight::zero(q.vertices()) : io::parse_weight(inv.lambda, q.vertices());
}

DimVector need_alpha(const Invocation& inv, const Quiver& q)
{
    if (inv.alpha.empty())
        throw ParseError("--alpha is required");
    return io::parse_dim_vector(inv.alpha, q.vertices());
}

DimVector need_bound(const Invocation& inv, const Quiver& q)
{
    if (inv.bound.empty())
        throw ParseError("--bound is required");
    return io::parse_bound(inv.bound, q.vertices());
}

void require_nonzero(const DimVector& a)
{
    if (a.is_zero())
        throw PreconditionError("the dimension vector must be nonzero");
}

GeneticOptions genetic_options(const Invocation& inv)
{
    GeneticOptions o;
    o.seed_mode = inv.seed == "real-roots" ? SeedMode::RealRoots : SeedMode::Minimal;
    o.budget = inv.budget;
    o.refine_threshold = inv.refine_threshold;
    o.threads = thread_hint();
    return o;
}

json vector_list(const std::vector<DimVector>& vs)
{
    json r = json::array();
    for (const auto& v : vs)
        r.push_back(io::to_json(v));
    return r;
}

void print_vectors(std::ostream& out, const std::vector<DimVector>& vs)
{
    for (const auto& v : vs)
        out << to_string(v) << '\n';
}

std::string join_plus(const std::vector<DimVector>& parts)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "+" : "") + to_string(parts[i]);
    return s;
}

std::string describe(const SigmaVerdict& v, const Quiver& q, const Weight& l, const DimVector& a)
{
    switch (v.reason) {
    case SigmaReason::Member: return "member";
    case SigmaReason::NotPositiveRoot: return "not a member; not a positive root";
    case SigmaReason::WeightPairingNonzero:
        return "not a member; weight pairing is " + to_string(pair(l, a));
    case SigmaReason::BlockedByDecomposition: {
        std::int64_t total = 0;
        for (const auto& b : v.witness)
            total += p(q, b);
        return "not a member; blocked by " + join_plus(v.witness) + " (sum of p = " + std::to_string(total) +
               " >= p = " + std::to_string(p(q, a)) + ")";
    }
    }
    return "?";
}

std::string describe(const GeneticCert& c)
{
    std::ostringstream os;
    os << c.setting.name() << ':';
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        os << (i ? " +" : "") << ' ' << c.parts[i].coefficient << '*' << to_string(c.parts[i].dim);
    return os.str();
}

std::string describe(const Containment& c)
{
    std::ostringstream os;
    os << c.setting.name() << " delta " << to_string(c.setting.delta) << " at vertices ";
    for (std::size_t u = 0; u < c.embedding.map.size(); ++u)
        os << (u ? "," : "") << c.embedding.map[u] + 1;
    return os.str();
}

// Certificates of every non-seed ancestor of `dim`, canonical order.
std::vector<GeneticCert> certificate_chain(const std::map<DimVector, const ClosureMember*>& closure,
                                           const DimVector& dim)
{
    std::set<DimVector, GradedLess> visited;
    std::vector<DimVector> stack{dim};
    while (!stack.empty()) {
        auto d = stack.back();
        stack.pop_back();
        auto it = closure.find(d);
        if (it == closure.end() || !it->second->cert || !visited.insert(d).second)
            continue;
        for (const auto& part : it->second->cert->parts)
            stack.push_back(part.dim);
    }
    std::vector<GeneticCert> chain;
    for (const auto& d : visited)
        chain.push_back(*closure.at(d)->cert);
    return chain;
}

void cmd_roots(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto bound = need_bound(inv, q);
    auto roots = positive_roots_upto(q, bound, thread_hint());
    json j = {{"command", "roots"}, {"bound", io::to_json(bound)}};
    json list = json::array();
    for (const auto& r : roots)
        list.push_back({{"dim", io::to_json(r.root)}, {"class", std::string(to_string(r.kind))}});
    j["roots"] = list;

    std::string oracle_line;
    if (inv.oracle) {
        std::vector<DimVector> real, imaginary;
        for (const auto& r : roots)
            (r.kind == RootClass::RealRoot ? real : imaginary).push_back(r.root);
        bool agrees = real == oracle::weyl_real_roots(q, bound) && imaginary == oracle::weyl_imaginary_roots(q, bound);
        j["oracle_agrees"] = agrees;
        oracle_line = std::string("oracle: Weyl-orbit enumeration ") + (agrees ? "agrees" : "DISAGREES");
    }
    if (inv.json) {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& r : roots)
        out << to_string(r.root) << ' ' << to_string(r.kind) << '\n';
    if (!oracle_line.empty())
        out << oracle_line << '\n';
}

void cmd_is_root(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto a = need_alpha(inv, q);
    require_nonzero(a);
    auto c = classify_root(q, a);
    if (inv.json)
        out << json{{"command", "is-root"}, {"alpha", io::to_json(a)}, {"class", std::string(to_string(c))}}.dump(2)
            << '\n';
    else
        out << to_string(a) << ' ' << to_string(c) << '\n';
}

void cmd_p(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto a = need_alpha(inv, q);
    auto value = p(q, a);
    if (inv.json)
        out << json{{"command", "p"}, {"alpha", io::to_json(a)}, {"p", value}}.dump(2) << '\n';
    else
        out << value << '\n';
}

void cmd_sigma(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto bound = need_bound(inv, q);
    auto members = sigma_upto(q, l, bound, thread_hint());
    if (inv.json)
        out << json{{"command", "sigma"},
                    {"bound", io::to_json(bound)},
                    {"lambda", io::to_json(l)},
                    {"members", vector_list(members)}}
                   .dump(2)
            << '\n';
    else
        print_vectors(out, members);
}

void cmd_in_sigma(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto a = need_alpha(inv, q);
    require_nonzero(a);
    SigmaSolver solver(q, l, a, thread_hint());
    auto v = solver.verdict(a);
    json j = {{"command", "in-sigma"},
              {"alpha", io::to_json(a)},
              {"lambda", io::to_json(l)},
              {"p", p(q, a)},
              {"verdict", io::to_json(v)}};
    std::string oracle_line;
    if (inv.oracle) {
        auto brute = oracle::brute_max_decomp_sum(q, l, a, true);
        bool brute_member = oracle::brute_in_sigma(q, l, a);
        j["oracle"] = {{"max_proper_decomp_sum", brute ? json(*brute) : json(nullptr)}, {"member", brute_member}};
        oracle_line = "oracle: best r>=2 decomposition sum = " + (brute ? std::to_string(*brute) : "none") +
                      ", " + (brute_member ? "member" : "not a member") +
                      (brute_member == v.member ? " (agrees)" : " (DISAGREES)");
    }
    if (inv.json) {
        out << j.dump(2) << '\n';
        return;
    }
    out << describe(v, q, l, a) << '\n';
    if (!oracle_line.empty())
        out << oracle_line << '\n';
}

void cmd_local_graph(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    if (inv.type.empty())
        throw ParseError("--type is required");
    auto t = io::parse_rep_type(inv.type, q.vertices());
    if (inv.refine)
        t = refine_type(q, t, inv.refine_threshold);
    auto dims = t.dims();
    auto g = local_graph(q, dims);
    auto alpha_tau = t.multiplicities();
    if (inv.json) {
        out << json{{"command", "local-graph"},
                    {"type", io::to_json(t)},
                    {"graph", io::to_json(g)},
                    {"alpha_tau", io::to_json(alpha_tau)},
                    {"total", io::to_json(t.total())}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "type " << to_string(t) << '\n' << "vertices " << g.vertices() << '\n';
    for (std::size_t i = 0; i < g.vertices(); ++i)
        out << "vertex " << i + 1 << " dim " << to_string(dims[i]) << " loops " << g.loops(i) << '\n';
    for (std::size_t i = 0; i < g.vertices(); ++i)
        for (std::size_t j = i + 1; j < g.vertices(); ++j)
            if (g.edges(i, j) > 0)
                out << "edge " << i + 1 << ' ' << j + 1 << ' ' << g.edges(i, j) << '\n';
    out << "alpha_tau " << to_string(alpha_tau) << '\n';
}

void cmd_tame_check(const Invocation& inv, std::ostream& out)
{
    if (!inv.graph_path.empty() && !inv.graph_inline.empty())
        throw ParseError("give either --graph or --graph-inline, not both");
    UGraph g;
    if (!inv.graph_path.empty())
        g = io::parse_ugraph(read_file(inv.graph_path));
    else if (!inv.graph_inline.empty())
        g = io::parse_ugraph(inv.graph_inline);
    else
        throw ParseError("a graph is required (--graph PATH or --graph-inline JSON)");
    if (inv.alpha.empty())
        throw ParseError("--alpha is required");
    auto a = io::parse_dim_vector(inv.alpha, g.vertices());

    std::vector<Containment> hits;
    if (inv.all) {
        hits = find_all_tame(g, a);
    } else if (auto c = contains_tame(g, a)) {
        hits.push_back(*c);
    }
    if (inv.json) {
        json list = json::array();
        for (const auto& c : hits)
            list.push_back(io::to_json(c));
        out << json{{"command", "tame-check"}, {"alpha", io::to_json(a)}, {"contained", !hits.empty()},
                    {"containments", list}}
                   .dump(2)
            << '\n';
        return;
    }
    if (hits.empty())
        out << "none\n";
    for (const auto& c : hits)
        out << describe(c) << '\n';
}

void cmd_genetic(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto bound = need_bound(inv, q);
    auto closure = genetic_closure(q, l, bound, genetic_options(inv));
    if (inv.json) {
        json list = json::array();
        for (const auto& m : closure)
            list.push_back(io::to_json(m));
        out << json{{"command", "genetic"}, {"bound", io::to_json(bound)}, {"lambda", io::to_json(l)},
                    {"seed_mode", inv.seed}, {"members", list}}
                   .dump(2)
            << '\n';
        return;
    }
    for (const auto& m : closure) {
        out << to_string(m.dim);
        if (m.cert)
            out << " depth " << m.depth << ' ' << describe(*m.cert) << '\n';
        else
            out << " seed\n";
    }
}

void cmd_irred_check(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto a = need_alpha(inv, q);
    require_nonzero(a);
    SigmaSolver solver(q, l, a, thread_hint());
    auto r = irreducible_sigma_check(solver, a, inv.budget, inv.refine_threshold);
    if (inv.json) {
        out << json{{"command", "irred-check"}, {"alpha", io::to_json(a)}, {"result", io::to_json(r)}}.dump(2)
            << '\n';
        return;
    }
    if (r.holds)
        out << "holds (" << r.types_checked << " non-trivial types checked)\n";
    else if (r.failing)
        out << "fails at type " << to_string(*r.failing) << '\n';
    else
        out << "fails: no representation of this dimension exists\n";
}

void cmd_compare(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto bound = need_bound(inv, q);
    auto report = compare(q, l, bound, genetic_options(inv));
    std::map<DimVector, const ClosureMember*> closure;
    for (const auto& m : report.closure)
        closure.emplace(m.dim, &m);
    auto discrepancies = report.discrepancies();

    if (inv.json) {
        json records = json::array();
        for (const auto& rec : report.records) {
            json chain = json::array();
            if (rec.closure)
                for (const auto& c : certificate_chain(closure, rec.alpha))
                    chain.push_back(io::to_json(c));
            records.push_back({{"alpha", io::to_json(rec.alpha)},
                               {"sigma", io::to_json(rec.verdict)},
                               {"genetic", {{"member", rec.closure.has_value()}, {"chain", chain}}},
                               {"irreducible", rec.irreducible ? io::to_json(*rec.irreducible) : json(nullptr)},
                               {"error", rec.error.empty() ? json(nullptr) : json(rec.error)}});
        }
        json bad = json::array();
        for (const auto* rec : discrepancies)
            bad.push_back(io::to_json(rec->alpha));
        out << json{{"command", "compare"},
                    {"bound", io::to_json(bound)},
                    {"lambda", io::to_json(l)},
                    {"sigma", vector_list(report.sigma)},
                    {"genetic", vector_list(report.genetic)},
                    {"irreducible", vector_list(report.irreducible)},
                    {"closure_error", report.closure_error.empty() ? json(nullptr) : json(report.closure_error)},
                    {"records", records},
                    {"discrepancies", bad}}
                   .dump(2)
            << '\n';
        return;
    }
    auto line = [&](const char* name, const std::vector<DimVector>& vs) {
        out << name << ':';
        for (const auto& v : vs)
            out << ' ' << to_string(v);
        out << '\n';
    };
    line("sigma", report.sigma);
    line("genetic", report.genetic);
    line("irreducible", report.irreducible);
    if (!report.closure_error.empty())
        out << "closure incomplete: " << report.closure_error << '\n';
    out << "discrepancies: " << discrepancies.size() << '\n';
    for (const auto* rec : discrepancies) {
        out << "  " << to_string(rec->alpha) << ": sigma " << describe(rec->verdict, q, l, rec->alpha) << "; genetic "
            << (rec->closure ? (rec->closure->cert ? describe(*rec->closure->cert) : std::string("seed"))
                             : std::string("absent"))
            << "; irreducible ";
        if (!rec->irreducible)
            out << "error: " << rec->error;
        else if (rec->irreducible->holds)
            out << "holds";
        else if (rec->irreducible->failing)
            out << "fails at " << to_string(*rec->irreducible->failing);
        else
            out << "fails (no representations)";
        out << '\n';
    }
}

void cmd_seeds(const Invocation& inv, std::ostream& out)
{
    auto q = load_quiver(inv);
    auto l = load_weight(inv, q);
    auto bound = need_bound(inv, q);
    auto s = seeds(q, l, bound, genetic_options(inv).seed_mode);
    if (inv.json)
        out << json{{"command", "seeds"}, {"seed_mode", inv.seed}, {"seeds", vector_list(s)}}.dump(2) << '\n';
    else
        print_vectors(out, s);
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Root data, simple dimension vectors and genetic closure for quivers", "sigma-roots"};
    app.require_subcommand(1);
    Invocation inv;

    struct Command {
        const char* name;
        const char* help;
        void (*body)(const Invocation&, std::ostream&);
    };
    const std::vector<Command> commands = {
        {"roots", "positive roots up to --bound with their class", cmd_roots},
        {"is-root", "classify --alpha", cmd_is_root},
        {"p", "p(alpha) = 1 - <alpha, alpha>", cmd_p},
        {"sigma", "simple dimension vectors up to --bound", cmd_sigma},
        {"in-sigma", "membership verdict and blocking decomposition for --alpha", cmd_in_sigma},
        {"local-graph", "local graph of a representation type (--type)", cmd_local_graph},
        {"tame-check", "tame setting contained in (--graph, --alpha)", cmd_tame_check},
        {"genetic", "genetic closure up to --bound with certificates", cmd_genetic},
        {"irred-check", "tame setting in every refined non-trivial type of --alpha", cmd_irred_check},
        {"compare", "all three descriptions side by side up to --bound", cmd_compare},
        {"seeds", "starting set of the genetic closure", cmd_seeds},
    };
    std::map<CLI::App*, const Command*> by_app;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        by_app[sub] = &c;
        sub->add_option("--quiver", inv.quiver_path, "quiver file (text or JSON)");
        sub->add_option("--quiver-inline", inv.quiver_inline, "quiver text with ';' as line separator");
        sub->add_option("--lambda", inv.lambda, "weight, e.g. 1/2,-1/3 (default 0)");
        sub->add_option("--alpha", inv.alpha, "dimension vector, e.g. 1,0,2");
        sub->add_option("--bound", inv.bound, "box bound: full vector or one uniform value");
        sub->add_option("--type", inv.type, "representation type, e.g. (1,1,0);(1,0,1)");
        sub->add_option("--graph", inv.graph_path, "graph JSON file");
        sub->add_option("--graph-inline", inv.graph_inline, "graph JSON");
        sub->add_option("--seed", inv.seed, "minimal | real-roots")->check(CLI::IsMember({"minimal", "real-roots"}));
        sub->add_option("--refine-threshold", inv.refine_threshold, "split parts with p > 0 or p > 1")
            ->check(CLI::IsMember({0, 1}));
        sub->add_option("--budget", inv.budget, "search node budget")->check(CLI::PositiveNumber);
        sub->add_flag("--json", inv.json, "machine-readable output");
        sub->add_flag("--oracle", inv.oracle, "cross-check with the brute-force oracles");
        sub->add_flag("--refine", inv.refine, "local-graph: refine the type first");
        sub->add_flag("--all", inv.all, "tame-check: list every containment class");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    const Command* chosen = nullptr;
    for (auto* sub : app.get_subcommands())
        chosen = by_app.at(sub);

    try {
        std::ostringstream buffer;
        chosen->body(inv, buffer);
        out << buffer.str();
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> storage{"sigma-roots"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace sigma_roots
