/*
 * Copyright 2026 The sigpi Authors
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

#include "sigpi/equiv.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace sigpi {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::Standard: return "standard";
    case Variant::Weak: return "weak";
    case Variant::Reemit: return "reemit";
    case Variant::Pinned: return "pinned";
    case Variant::Split: return "split";
    case Variant::Barbed: return "barbed";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
    if (name == "standard") return Variant::Standard;
    if (name == "weak") return Variant::Weak;
    if (name == "reemit" || name == "v1") return Variant::Reemit;
    if (name == "pinned" || name == "v2") return Variant::Pinned;
    if (name == "split" || name == "v3") return Variant::Split;
    if (name == "barbed") return Variant::Barbed;
    return std::nullopt;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Distinguished: return "distinguished";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Unsupported: return "unsupported";
    }
    return "?";
}

StepFlags flags_for(Variant v) {
    StepFlags f;
    f.reemit_on_read = v == Variant::Reemit;
    f.pin_edges = v == Variant::Pinned || v == Variant::Split;
    return f;
}

namespace {

struct Option {
    int state;
    std::string via;
    std::vector<std::pair<int, int>> pairs;
};

struct Challenge {
    std::string clause;
    Action action;
    int target = -1;
    std::vector<int> context;
    std::vector<Option> options;
};

struct Removal {
    int stamp;
    int challenger;
    Challenge challenge;
};

class Game {
  public:
    Game(const Lts& l, const Alphabet& a, const BisimOptions& o)
        : l_(l), w_(l), a_(a), o_(o), n_(static_cast<int>(l.size())), rel_(static_cast<std::size_t>(n_) * n_, 1) {
        std::map<std::string, int> pair_index;
        for (int i = 0; i < static_cast<int>(a.size()); ++i) pair_index[Action::in(a[i].first, a[i].second).key()] = i;
        in_.assign(n_, std::vector<int>(a.size(), -1));
        susp_.assign(n_, true);
        commits_.resize(n_);
        for (const auto& e : l.edges) {
            if (e.action.kind == Action::Kind::In) {
                auto it = pair_index.find(e.action.key());
                if (it != pair_index.end()) in_[e.src][it->second] = e.dst;
            }
            if (e.action.kind == Action::Kind::Tau) susp_[e.src] = false;
            if (e.action.kind == Action::Kind::Out) commits_[e.src].insert(e.action.signal);
        }
        if (o.variant == Variant::Split) build_contexts();
        if (o.variant == Variant::Barbed) {
            wsusp_.assign(n_, false);
            for (int x = 0; x < n_; ++x)
                for (int y : w_.tau[x])
                    if (susp_[y]) wsusp_[x] = true;
        }
    }

    bool related(int x, int y) const { return rel_[idx(x, y)] != 0; }

    void solve() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n_; ++x)
                for (int y = x + 1; y < n_; ++y) {
                    if (!related(x, y)) continue;
                    int challenger = x;
                    auto f = first_failure(x, y);
                    if (!f) {
                        challenger = y;
                        f = first_failure(y, x);
                    }
                    if (!f) continue;
                    rel_[idx(x, y)] = rel_[idx(y, x)] = 0;
                    why_.emplace(idx(x, y), Removal{stamp_++, challenger, std::move(*f)});
                    changed = true;
                }
        }
    }

    std::shared_ptr<Witness> witness(int x, int y) {
        auto key = idx(std::min(x, y), std::max(x, y));
        auto memo_key = idx(x, y);
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
        auto it = why_.find(key);
        if (it == why_.end()) return nullptr;
        const Removal& r = it->second;
        auto node = std::make_shared<Witness>();
        memo_[memo_key] = node;
        node->left = x;
        node->right = y;
        node->challenger_left = r.challenger == x;
        node->clause = r.challenge.clause;
        node->action = r.challenge.action;
        node->target = r.challenge.target;
        node->context = r.challenge.context;
        for (const auto& opt : r.challenge.options) {
            const std::pair<int, int>* broken = nullptr;
            int best = r.stamp;
            for (const auto& pr : opt.pairs) {
                if (related(pr.first, pr.second)) continue;
                auto w = why_.find(idx(std::min(pr.first, pr.second), std::max(pr.first, pr.second)));
                if (w != why_.end() && w->second.stamp < best) {
                    best = w->second.stamp;
                    broken = &pr;
                }
            }
            if (!broken) continue;
            node->answers.push_back(Witness::Answer{opt.state, opt.via, witness(broken->first, broken->second)});
        }
        return node;
    }

    bool replay(const std::shared_ptr<Witness>& w, std::set<const Witness*>& done) {
        if (!w) return false;
        if (done.count(w.get())) return true;
        if (related(w->left, w->right) && w->left != w->right) return false;
        int x = w->challenger_left ? w->left : w->right;
        int y = w->challenger_left ? w->right : w->left;
        const Challenge* match = nullptr;
        auto all = challenges(x, y);
        for (const auto& c : all)
            if (c.clause == w->clause && c.action.key() == w->action.key() && c.target == w->target &&
                c.context == w->context)
                match = &c;
        if (!match || match->options.size() != w->answers.size()) return false;
        for (std::size_t i = 0; i < w->answers.size(); ++i) {
            const auto& opt = match->options[i];
            const auto& ans = w->answers[i];
            if (opt.state != ans.state || opt.via != ans.via || !ans.why) return false;
            bool names_pair = std::any_of(opt.pairs.begin(), opt.pairs.end(), [&](const auto& pr) {
                return pr.first == ans.why->left && pr.second == ans.why->right;
            });
            if (!names_pair) return false;
        }
        done.insert(w.get());
        for (const auto& ans : w->answers)
            if (!replay(ans.why, done)) return false;
        return true;
    }

    std::vector<int> classes() const {
        std::vector<int> cls(n_, -1);
        int next = 0;
        for (int x = 0; x < n_; ++x) {
            if (cls[x] >= 0) continue;
            for (int y = x; y < n_; ++y)
                if (cls[y] < 0 && related(x, y)) cls[y] = next;
            ++next;
        }
        return cls;
    }

  private:
    const Lts& l_;
    WeakLts w_;
    const Alphabet& a_;
    BisimOptions o_;
    int n_;
    std::vector<char> rel_;
    std::vector<std::vector<int>> in_;
    std::vector<bool> susp_;
    std::vector<bool> wsusp_;
    std::vector<std::set<std::string>> commits_;
    std::vector<std::vector<int>> contexts_;
    std::unordered_map<std::size_t, Removal> why_;
    std::unordered_map<std::size_t, std::shared_ptr<Witness>> memo_;
    int stamp_ = 0;

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

    void build_contexts() {
        contexts_.push_back({});
        std::size_t k = std::min(o_.context_size, a_.size());
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (!cur.empty()) contexts_.push_back(cur);
            if (cur.size() == k) return;
            for (int i = from; i < static_cast<int>(a_.size()); ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }

    int in_context(int x, const std::vector<int>& ctx) const {
        for (int i : ctx) {
            if (x < 0) return -1;
            x = in_[x][i];
        }
        return x;
    }

    std::string answer_key(const Action& a) const {
        if (a.kind == Action::Kind::Tau) return "tau";
        if (a.kind == Action::Kind::Next && o_.relaxed_next) return kRelaxedNextKey;
        return a.key();
    }

    Challenge step(const Action& a, int target, int y, const std::string& clause = "step") const {
        Challenge c{clause, a, target, {}, {}};
        for (int y2 : w_.weak(y, answer_key(a))) c.options.push_back(Option{y2, "weak", {{target, y2}}});
        return c;
    }

    bool strong_challenged(Action::Kind k) const {
        switch (o_.variant) {
        case Variant::Standard:
        case Variant::Reemit: return k != Action::Kind::Pin && k != Action::Kind::AuxIn;
        // Pinned reads are covered by the closure clause only.
        case Variant::Pinned: return k == Action::Kind::Tau || k == Action::Kind::Out || k == Action::Kind::Next;
        case Variant::Split: return k == Action::Kind::Tau || k == Action::Kind::Out;
        default: return false;
        }
    }

    std::vector<Challenge> challenges(int x, int y) const {
        std::vector<Challenge> out;
        const Variant v = o_.variant;
        if (v == Variant::Weak) {
            for (int x2 : w_.tau[x])
                if (x2 != x) out.push_back(step(Action::tau(), x2, y));
            for (const auto& [key, targets] : w_.succ[x]) {
                const Action& a = key == kRelaxedNextKey ? w_.actions.at(Action::next().key()) : w_.actions.at(key);
                if (a.kind == Action::Kind::Pin) continue;
                if (a.kind == Action::Kind::Next && (key == kRelaxedNextKey) != o_.relaxed_next) continue;
                for (int x2 : targets) out.push_back(step(a, x2, y));
            }
            return out;
        }
        if (v == Variant::Barbed) {
            for (int e : l_.out[x]) {
                const Edge& edge = l_.edges[e];
                if (edge.action.kind == Action::Kind::Tau) out.push_back(step(edge.action, edge.dst, y));
            }
            if (wsusp_[x])
                for (const auto& s : commits_[x]) {
                    Challenge c{"commit", Action::out({}, s, make_unit()), x, {}, {}};
                    for (int y2 : w_.tau[y])
                        if (commits_[y2].count(s)) c.options.push_back(Option{y2, "commit", {{x, y2}}});
                    out.push_back(std::move(c));
                }
            if (susp_[x])
                for (int e : l_.out[x]) {
                    const Edge& edge = l_.edges[e];
                    if (edge.action.kind != Action::Kind::Next) continue;
                    Challenge c{"suspend", edge.action, edge.dst, {}, {}};
                    for (int y2 : w_.tau[y]) {
                        if (!susp_[y2]) continue;
                        for (int f : l_.out[y2])
                            if (l_.edges[f].action.kind == Action::Kind::Next)
                                c.options.push_back(Option{l_.edges[f].dst, "next", {{x, y2}, {edge.dst, l_.edges[f].dst}}});
                    }
                    out.push_back(std::move(c));
                }
            return out;
        }

        for (int e : l_.out[x]) {
            const Edge& edge = l_.edges[e];
            if (strong_challenged(edge.action.kind)) out.push_back(step(edge.action, edge.dst, y));
        }
        if (v == Variant::Pinned)
            for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
                int xs = in_[x][i];
                int ys = in_[y][i];
                if (xs < 0 || ys < 0) continue;
                Challenge c{"closure", Action::in(a_[i].first, a_[i].second), xs, {i}, {}};
                c.options.push_back(Option{ys, "closure", {{xs, ys}}});
                out.push_back(std::move(c));
            }
        if (v == Variant::Split) {
            for (int e : l_.out[x]) {
                const Edge& edge = l_.edges[e];
                if (edge.action.kind != Action::Kind::Pin) continue;
                Challenge c = step(edge.action, edge.dst, y, "input");
                int i = pair_of(edge.action);
                for (int y2 : w_.tau[y])
                    if (i >= 0 && in_[y2][i] >= 0)
                        c.options.push_back(Option{in_[y2][i], "absorb", {{edge.dst, in_[y2][i]}}});
                out.push_back(std::move(c));
            }
            for (std::size_t ci = 0; ci < contexts_.size(); ++ci) {
                int xs = in_context(x, contexts_[ci]);
                int ys = in_context(y, contexts_[ci]);
                if (xs < 0 || ys < 0) continue;
                for (int e : l_.out[xs]) {
                    const Edge& edge = l_.edges[e];
                    if (edge.action.kind != Action::Kind::Next) continue;
                    Challenge c{"next-context", edge.action, edge.dst, contexts_[ci], {}};
                    for (int y2 : w_.tau[ys])
                        for (int f : l_.out[y2])
                            if (l_.edges[f].action.kind == Action::Kind::Next)
                                c.options.push_back(Option{l_.edges[f].dst, "next", {{xs, y2}, {edge.dst, l_.edges[f].dst}}});
                    out.push_back(std::move(c));
                }
            }
        }
        return out;
    }

    int pair_of(const Action& pin) const {
        for (int i = 0; i < static_cast<int>(a_.size()); ++i)
            if (a_[i].first == pin.signal && term_equal(a_[i].second, pin.value)) return i;
        return -1;
    }

    std::optional<Challenge> first_failure(int x, int y) const {
        for (auto& c : challenges(x, y)) {
            bool met = std::any_of(c.options.begin(), c.options.end(), [&](const Option& opt) {
                return std::all_of(opt.pairs.begin(), opt.pairs.end(),
                                   [&](const auto& pr) { return related(pr.first, pr.second); });
            });
            if (!met) return std::move(c);
        }
        return std::nullopt;
    }
};

bool has_tau_cycle(const Lts& l) {
    // Iterative three-colour DFS over tau edges.
    std::vector<int> colour(l.size(), 0);
    for (std::size_t s = 0; s < l.size(); ++s) {
        if (colour[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
        colour[s] = 1;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i == l.out[u].size()) {
                colour[u] = 2;
                stack.pop_back();
                continue;
            }
            const Edge& e = l.edges[l.out[u][i++]];
            if (e.action.kind != Action::Kind::Tau) continue;
            if (colour[e.dst] == 1) return true;
            if (colour[e.dst] == 0) {
                colour[e.dst] = 1;
                stack.emplace_back(e.dst, 0);
            }
        }
    }
    return false;
}

}  // namespace

BisimResult bisim(const CanonicalState& p, const CanonicalState& q, const Module& defs, const Alphabet& a,
                  const Bounds& b, const BisimOptions& o) {
    BisimResult r;
    r.options = o;
    r.alphabet = a;
    r.bounds = b;
    r.lts = explore({p, q}, defs, a, b, flags_for(o.variant));
    if (r.lts.roots.size() < 2) {
        r.verdict = Verdict::Inconclusive;
        r.note = "state bound reached before both roots were added";
        return r;
    }
    r.left = r.lts.roots[0];
    r.right = r.lts.roots[1];
    if (!r.lts.complete) {
        r.verdict = Verdict::Inconclusive;
        r.note = "exploration bound hit";
        return r;
    }
    if (o.variant == Variant::Barbed && has_tau_cycle(r.lts)) {
        r.verdict = Verdict::Unsupported;
        r.note = "barbed bisimulation is only supported on reactive programs";
        return r;
    }
    Game g(r.lts, a, o);
    g.solve();
    if (g.related(r.left, r.right)) {
        r.verdict = Verdict::Equivalent;
    } else {
        r.verdict = Verdict::Distinguished;
        r.witness = g.witness(r.left, r.right);
    }
    return r;
}

BisimResult bisim(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a, const Bounds& b,
                  const BisimOptions& o) {
    return bisim(canonicalize(p, defs), canonicalize(q, defs), defs, a, b, o);
}

BisimResult bisim_relaxed_next(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a,
                               const Bounds& b) {
    BisimOptions o;
    o.relaxed_next = true;
    return bisim(p, q, defs, a, b, o);
}

std::vector<int> self_partition(const Lts& l, const Alphabet& a, const BisimOptions& o) {
    Game g(l, a, o);
    g.solve();
    return g.classes();
}

bool replay(const BisimResult& r) {
    if (r.verdict != Verdict::Distinguished || !r.witness) return false;
    if (r.witness->left != r.left || r.witness->right != r.right) return false;
    Game g(r.lts, r.alphabet, r.options);
    g.solve();
    std::set<const Witness*> done;
    return g.replay(r.witness, done);
}

}  // namespace sigpi
