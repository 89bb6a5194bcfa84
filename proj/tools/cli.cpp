/*
 * Copyright 2026 The omegacoalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "omegacoalg/omegacoalg.hpp"

namespace omegacoalg::cli {

namespace {

using io::SpecDocument;
using io::StateName;
using io::json;

constexpr const char* kLeftPrefix = "left:";
constexpr const char* kRightPrefix = "right:";

SpecDocument from_plain(const Coalgebra<std::string>& c) {
    std::vector<std::pair<Label, std::size_t>> arities;
    for (const auto& a : *c.container().labels()) arities.emplace_back(a, c.container().arity(a));
    std::map<StateName, PValue<StateName>> gamma;
    for (const auto& s : c.finite_states()) gamma.emplace(s, c.step(s));
    return {io::make_plain(std::move(arities), c.finite_states(), std::move(gamma))};
}

SpecDocument from_indexed(const IndexedCoalgebra<std::string>& c) {
    const auto& ic = c.base();
    std::map<Sort, std::vector<IndexedContainer::Shape>> shapes;
    for (const auto& i : ic.sorts()) {
        for (const auto& a : ic.labels_at(i)) shapes[i].push_back(ic.shape(i, a));
    }
    std::map<StateName, Sort> sort_of;
    std::map<StateName, PValue<StateName>> gamma;
    for (const auto& s : c.states()) {
        sort_of.emplace(s, c.sort_of(s));
        gamma.emplace(s, c.step(s));
    }
    return {io::make_indexed(ic.sorts(), std::move(shapes), c.states(), std::move(sort_of),
                             std::move(gamma))};
}

// Non-bisimilar states of an n-state coalgebra differ at depth <= n, so
// this bound always finds the witness depth.
std::size_t separation_bound(const SpecDocument& spec) { return spec.states().size() + 1; }

std::optional<std::size_t> first_difference(const SpecDocument& spec, const StateName& s,
                                            const StateName& t, std::size_t depth) {
    if (!spec.is_indexed()) return distinguishing_depth(spec.plain().coalgebra, s, t, depth);
    const auto& c = spec.indexed().coalgebra;
    if (c.sort_of(s) != c.sort_of(t)) {
        throw Error(ErrorKind::SortMismatch, "states '" + s + "' and '" + t + "' have sorts " +
                                                 c.sort_of(s).name + " and " + c.sort_of(t).name);
    }
    auto engine = Approximator<StateName>::of(c);
    for (std::size_t n = 0; n <= depth; ++n) {
        if (!tree_equal(engine->tree(s, n), engine->tree(t, n))) return n;
    }
    return std::nullopt;
}

void require_state(const SpecDocument& spec, const StateName& s) {
    if (!spec.has_state(s)) throw Error(ErrorKind::UnknownState, "unknown state '" + s + "'");
}

ApproxTree approximation(const SpecDocument& spec, const StateName& s, std::size_t n) {
    return spec.is_indexed() ? iapproximate(spec.indexed().coalgebra, s, n).tree
                             : approximate(spec.plain().coalgebra, s, n);
}

// --- check suite ------------------------------------------------------------

template <class C>
CheckResult compatibility(const C& c, const std::vector<StateName>& states, std::size_t depth) {
    auto engine = Approximator<StateName>::of(c);
    for (const auto& s : states) {
        for (std::size_t n = 0; n < depth; ++n) {
            if (!tree_equal(truncate(engine->tree(s, n + 1)), engine->tree(s, n))) {
                return CheckResult::fail("state '" + s + "' at depth " + std::to_string(n));
            }
        }
    }
    return CheckResult::pass();
}

template <class Bisim, class SameBlock>
CheckResult oracle_agreement(const std::vector<StateName>& states, std::size_t depth,
                             Bisim&& bounded, SameBlock&& same_block) {
    for (const auto& s : states) {
        for (const auto& t : states) {
            auto verdict = bounded(s, t, depth);
            if (!verdict) continue;
            if (*verdict != same_block(s, t)) {
                return CheckResult::fail("states '" + s + "' and '" + t + "' at depth " +
                                         std::to_string(depth));
            }
        }
    }
    return CheckResult::pass();
}

CheckResult guarded(const std::function<CheckResult()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return CheckResult::fail(e.what());
    }
}

std::vector<CheckLine> plain_checks(const io::PlainSpec& spec, std::size_t depth) {
    const auto& c = spec.coalgebra;
    const auto& states = spec.states;
    const auto& box = spec.container;
    auto u = unfold_map(c);
    std::vector<CheckLine> lines;
    auto add = [&](std::string name, const std::function<CheckResult()>& f) {
        lines.push_back({std::move(name), guarded(f)});
    };

    add("compatibility", [&] { return compatibility(c, states, depth); });
    add("well-formed approximations", [&] {
        auto engine = Approximator<StateName>::of(c);
        for (const auto& s : states) {
            if (!well_formed(box, engine->tree(s, depth))) {
                return CheckResult::fail("state '" + s + "'");
            }
        }
        return CheckResult::pass();
    });
    add("into after out", [&] {
        for (const auto& s : states) {
            if (!observationally_equal(into(box, out(u(s))), u(s), depth)) {
                return CheckResult::fail("state '" + s + "'");
            }
        }
        return CheckResult::pass();
    });
    add("out after into", [&] {
        for (const auto& s : states) {
            const auto v = pmap(u, c.step(s));
            const auto o = out(into(box, v));
            if (o.label != v.label) return CheckResult::fail("state '" + s + "': label");
            for (std::size_t b = 0; b < v.children.size(); ++b) {
                if (!observationally_equal(o.children[b], v.children[b], depth)) {
                    return CheckResult::fail("state '" + s + "', position " + std::to_string(b));
                }
            }
        }
        return CheckResult::pass();
    });
    add("unfold is a morphism", [&] {
        return verify_morphism(MorphismCandidate<StateName>{c, u}, depth);
    });
    add("uniqueness: unfold through the quotient", [&] {
        auto m = minimize(c);
        auto uq = unfold_map(m.quotient);
        auto rep = m.representative;
        return uniqueness_probe(
            c, MorphismCandidate<StateName>{c, [uq, rep](const StateName& s) { return uq(rep(s)); }},
            depth);
    });
    add("uniqueness: one-step refold", [&] {
        auto refold = [c, box, u](const StateName& s) { return into(box, pmap(u, c.step(s))); };
        return uniqueness_probe(c, MorphismCandidate<StateName>{c, refold}, depth);
    });
    add("diagonal is a bisimulation", [&] { return verify_bisim(c, diagonal_bisim(c)); });
    const auto p = partition_refine(c);
    auto bounded = [&](const StateName& s, const StateName& t, std::size_t n) {
        return std::optional<bool>(bounded_bisim(c, s, t, n));
    };
    auto same = [&](const StateName& s, const StateName& t) { return p.same_block(s, t); };
    add("partition agrees with bounded at |S|",
        [&] { return oracle_agreement(states, states.size(), bounded, same); });
    add("partition agrees with bounded at 2|S|",
        [&] { return oracle_agreement(states, 2 * states.size(), bounded, same); });
    add("coinduction transfer", [&] {
        const auto w = witness_from_partition(c, p);
        for (const auto& e : w.entries) {
            if (!coinduction_transfer(c, w, e.pair.first, e.pair.second, depth)) {
                return CheckResult::fail("pair ('" + e.pair.first + "', '" + e.pair.second + "')");
            }
        }
        return CheckResult::pass();
    });
    return lines;
}

std::vector<CheckLine> indexed_checks(const io::IndexedSpec& spec, std::size_t depth) {
    const auto& c = spec.coalgebra;
    const auto& ic = spec.container;
    const auto& states = spec.states;
    std::vector<CheckLine> lines;
    auto add = [&](std::string name, const std::function<CheckResult()>& f) {
        lines.push_back({std::move(name), guarded(f)});
    };
    auto iu = [c](const StateName& s) { return iunfold(c, s); };

    add("compatibility", [&] { return compatibility(c, states, depth); });
    add("well-sorted approximations", [&] {
        for (const auto& s : states) {
            if (!well_sorted(ic, iapproximate(c, s, depth))) {
                return CheckResult::fail("state '" + s + "'");
            }
        }
        return CheckResult::pass();
    });
    add("into after out", [&] {
        for (const auto& s : states) {
            const auto m = iu(s);
            const auto back = i_into(ic, m.sort(), i_out(ic, m));
            if (back.sort() != m.sort() ||
                !observationally_equal(back.element(), m.element(), depth)) {
                return CheckResult::fail("state '" + s + "'");
            }
        }
        return CheckResult::pass();
    });
    add("unfold is a morphism", [&] {
        return i_verify_morphism<StateName>(c, iu, depth);
    });
    add("uniqueness: one-step refold", [&] {
        std::function<SortedMElement(const StateName&)> refold = [c, ic, iu](const StateName& s) {
            return i_into(ic, c.sort_of(s), pmap(iu, c.step(s)));
        };
        return i_uniqueness_probe(c, refold, depth);
    });
    const auto p = ipartition_refine(c);
    auto bounded = [&](const StateName& s, const StateName& t, std::size_t n) -> std::optional<bool> {
        if (c.sort_of(s) != c.sort_of(t)) return std::nullopt;
        return ibounded_bisim(c, s, t, n);
    };
    auto same = [&](const StateName& s, const StateName& t) { return p.same_block(s, t); };
    add("partition agrees with bounded at |S|",
        [&] { return oracle_agreement(states, states.size(), bounded, same); });
    add("partition agrees with bounded at 2|S|",
        [&] { return oracle_agreement(states, 2 * states.size(), bounded, same); });
    add("partition respects sorts", [&] {
        for (const auto& s : states) {
            for (const auto& t : states) {
                if (p.same_block(s, t) && c.sort_of(s) != c.sort_of(t)) {
                    return CheckResult::fail("states '" + s + "' and '" + t + "'");
                }
            }
        }
        return CheckResult::pass();
    });
    return lines;
}

// --- commands ---------------------------------------------------------------

struct Options {
    std::string spec;
    std::string format = "text";
    std::optional<std::size_t> depth;
    std::string state;
    std::string left;
    std::string right;
    std::string algorithm = "partition";
    std::string other;
    std::string demo;
};

int cmd_approx(const Options& o, std::ostream& out) {
    const auto spec = io::load_spec_file(o.spec);
    require_state(spec, o.state);
    const std::size_t n = o.depth.value_or(3);
    check_depth(n);
    const ApproxTree t = approximation(spec, o.state, n);
    if (o.format == "json") {
        json doc = {{"state", o.state}, {"depth", n}, {"tree", io::tree_to_json(t)}};
        if (spec.is_indexed()) doc["sort"] = spec.indexed().sort_of.at(o.state).name;
        out << doc.dump(2) << "\n";
    } else {
        out << render_text(t) << "\n";
    }
    return kExitOk;
}

int cmd_bisim(const Options& o, std::ostream& out) {
    auto spec = io::load_spec_file(o.spec);
    std::string left = o.left;
    std::string right = o.right;
    if (!o.other.empty()) {
        const auto other = io::load_spec_file(o.other);
        if (!left.empty()) require_state(spec, left);
        if (!right.empty()) require_state(other, right);
        spec = io::disjoint_union(spec, other, kLeftPrefix, kRightPrefix);
        if (!left.empty()) left = kLeftPrefix + left;
        if (!right.empty()) right = kRightPrefix + right;
    }
    if (left.empty() != right.empty()) {
        throw Error(ErrorKind::Validation, "--left and --right must be given together");
    }
    if (o.algorithm == "bounded" && !o.depth) {
        throw Error(ErrorKind::Validation, "--algorithm bounded requires --depth");
    }
    if (o.depth) check_depth(*o.depth);

    if (left.empty()) {
        if (o.algorithm == "bounded") {
            throw Error(ErrorKind::Validation, "--algorithm bounded requires --left and --right");
        }
        out << io::blocks_to_json(io::sorted_blocks(spec)).dump(2) << "\n";
        return kExitOk;
    }
    require_state(spec, left);
    require_state(spec, right);

    std::optional<std::size_t> k;
    if (o.algorithm == "bounded") {
        k = first_difference(spec, left, right, *o.depth);
    } else {
        // Sort check first, so that indexed specs report the mismatch.
        k = first_difference(spec, left, right, 0);
        const auto blocks = io::sorted_blocks(spec);
        bool same = false;
        for (const auto& b : blocks) {
            const bool l = std::find(b.begin(), b.end(), left) != b.end();
            const bool r = std::find(b.begin(), b.end(), right) != b.end();
            if (l || r) {
                same = l && r;
                break;
            }
        }
        k = same ? std::nullopt : first_difference(spec, left, right, separation_bound(spec));
    }
    if (!k) {
        out << "bisimilar\n";
        return kExitOk;
    }
    out << "distinguishable at depth " << *k << "\n";
    return kExitNegative;
}

int cmd_minimize(const Options& o, std::ostream& out) {
    out << io::to_json(io::minimized(io::load_spec_file(o.spec))).dump(2) << "\n";
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto spec = io::load_spec_file(o.spec);
    const std::size_t n = o.depth.value_or(30);
    check_depth(n);
    const auto lines = run_checks(spec, n);
    bool all = true;
    json report = json::array();
    for (const auto& l : lines) {
        all = all && l.result.ok;
        report.push_back({{"name", l.name}, {"ok", l.result.ok}, {"detail", l.result.detail}});
    }
    if (o.format == "json") {
        out << json{{"depth", n}, {"ok", all}, {"checks", report}}.dump(2) << "\n";
    } else {
        for (const auto& l : lines) {
            out << (l.result.ok ? "PASS " : "FAIL ") << l.name;
            if (!l.result.ok && !l.result.detail.empty()) out << ": " << l.result.detail;
            out << "\n";
        }
    }
    return all ? kExitOk : kExitNegative;
}

int cmd_demo(const Options& o, std::ostream& out) {
    const auto spec = demo_spec(o.demo);
    if (o.format == "json") {
        out << io::to_json(spec).dump(2) << "\n";
        return kExitOk;
    }
    const std::size_t n = o.depth.value_or(3);
    check_depth(n);
    for (const auto& s : spec.states()) {
        out << s << ": " << render_text(approximation(spec, s, n)) << "\n";
    }
    return kExitOk;
}

}  // namespace

SpecDocument demo_spec(const std::string& name) {
    if (name == "stream") return from_plain(catalog::stream_coalgebra());
    if (name == "conat") return from_plain(catalog::conat_coalgebra(3));
    if (name == "fig1") return from_plain(catalog::fig1_coalgebra());
    if (name == "parity") return from_indexed(catalog::parity_coalgebra());
    throw Error(ErrorKind::Validation, "unknown example '" + name + "'");
}

std::vector<CheckLine> run_checks(const SpecDocument& spec, std::size_t depth) {
    return spec.is_indexed() ? indexed_checks(spec.indexed(), depth)
                             : plain_checks(spec.plain(), depth);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Final coalgebras of containers: approximations, bisimilarity, minimization",
                 "omegacoalg"};
    app.require_subcommand(1);
    Options o;
    std::size_t depth = 0;
    auto* spec_opt = app.add_option("--spec", o.spec, "Spec document (JSON)");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* depth_opt = app.add_option("--depth", depth, "Observation depth");

    auto* approx = app.add_subcommand("approx", "Print the depth-n approximation of a state");
    approx->add_option("--state", o.state, "State name")->required();

    auto* bisim = app.add_subcommand("bisim", "Decide bisimilarity, or print the coarsest partition");
    bisim->add_option("--left", o.left, "First state");
    bisim->add_option("--right", o.right, "Second state");
    bisim->add_option("--algorithm", o.algorithm, "Decision procedure")
        ->check(CLI::IsMember({"partition", "bounded"}));
    bisim->add_option("--other", o.other,
                      "Second spec; --left names a state of --spec, --right one of --other");

    auto* minimize_cmd = app.add_subcommand("minimize", "Quotient by the coarsest bisimulation");
    auto* check = app.add_subcommand("check", "Run the invariant suite on a spec");

    auto* demo = app.add_subcommand("demo", "Print a built-in example");
    demo->add_option("name", o.demo, "stream, conat, fig1 or parity")
        ->required()
        ->check(CLI::IsMember({"stream", "conat", "fig1", "parity"}));

    for (auto* sub : {approx, bisim, minimize_cmd, check, demo}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    if (depth_opt->count() > 0) o.depth = depth;

    try {
        if (!demo->parsed() && spec_opt->count() == 0) {
            throw Error(ErrorKind::Validation, "--spec is required");
        }
        if (approx->parsed()) return cmd_approx(o, out);
        if (bisim->parsed()) return cmd_bisim(o, out);
        if (minimize_cmd->parsed()) return cmd_minimize(o, out);
        if (check->parsed()) return cmd_check(o, out);
        return cmd_demo(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::UnknownState ? kExitUnknownState : kExitInvalid;
    }
}

}  // namespace omegacoalg::cli
