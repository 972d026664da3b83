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

#include "sigpi/eval.hpp"

namespace sigpi {

namespace {

struct Evaluator {
    const Module& defs;
    std::size_t fuel;

    TermPtr run(const TermPtr& e) {
        switch (e->kind) {
        case Term::Kind::Var: return e;
        case Term::Kind::Deref: throw EvalError("dereference !" + e->name + " outside a continuation");
        case Term::Kind::Ctor: {
            if (is_value(*e)) return e;
            std::vector<TermPtr> args;
            for (const auto& a : e->args) args.push_back(run(a));
            return make_ctor(e->name, std::move(args));
        }
        case Term::Kind::Fun: return apply(*e);
        }
        return e;
    }

    TermPtr apply(const Term& call) {
        std::vector<TermPtr> args;
        for (const auto& a : call.args) args.push_back(run(a));
        const FunctionDef* f = defs.find_function(call.name);
        if (!f) throw EvalError("unknown function " + call.name);
        if (fuel == 0) throw EvalError("fuel exhausted while evaluating " + call.name);
        --fuel;
        for (const auto& eq : f->equations) {
            if (eq.patterns.size() != args.size()) continue;
            Subst theta;
            bool ok = true;
            for (std::size_t i = 0; i < args.size() && ok; ++i) {
                auto m = match_value(args[i], eq.patterns[i]);
                if (!m) ok = false;
                else theta.insert(m->begin(), m->end());
            }
            if (ok) return run(substitute(eq.body, theta));
        }
        std::string shown = call.name + "(";
        for (std::size_t i = 0; i < args.size(); ++i) shown += (i ? ", " : "") + to_string(args[i]);
        throw EvalError("no matching equation for " + shown + ")");
    }
};

}  // namespace

TermPtr eval_expr(const TermPtr& e, const Module& defs) {
    Evaluator ev{defs, defs.fuel};
    return ev.run(e);
}

}  // namespace sigpi
