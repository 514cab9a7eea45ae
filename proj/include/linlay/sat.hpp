#ifndef LINLAY_SAT_HPP
#define LINLAY_SAT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace linlay {

// Propositional CNF with 1-based variables and DIMACS-style signed literals.
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void add_clause(std::vector<int> lits) {
        if (lits.empty()) throw std::logic_error("empty clause added at build time");
        for (int lit : lits)
            if (lit == 0 || std::abs(lit) > num_vars)
                throw std::logic_error("clause literal outside variable range");
        clauses.push_back(std::move(lits));
    }
};

inline void write_dimacs(const CnfInstance& cnf, std::ostream& os) {
    os << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) os << lit << " ";
        os << "0\n";
    }
}

inline std::string write_dimacs(const CnfInstance& cnf) {
    std::ostringstream os;
    write_dimacs(cnf, os);
    return os.str();
}

// Parses solver model output: accepts "s SATISFIABLE" + "v ..." lines,
// minisat-style "SAT" plus a literal line, or bare literal lists. Every
// variable must be assigned; a truncated model is rejected.
inline std::vector<bool> parse_model(const std::string& text, int num_vars) {
    std::vector<signed char> value(static_cast<std::size_t>(num_vars) + 1, -1);
    std::istringstream is(text);
    std::string line;
    bool unsat_claim = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok == "s" || tok == "v" || tok == "SAT" || tok == "UNSAT" ||
            tok == "SATISFIABLE" || tok == "UNSATISFIABLE") {
            if (tok == "s") {
                std::string what;
                ls >> what;
                if (what == "UNSATISFIABLE") unsat_claim = true;
            }
            if (tok == "UNSAT") unsat_claim = true;
            if (tok != "v") continue;
        } else {
            ls.clear();
            ls.seekg(0);
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) continue;
            int var = std::abs(lit);
            if (var > num_vars)
                throw std::runtime_error("model literal " + std::to_string(lit) +
                                         " outside variable range 1.." +
                                         std::to_string(num_vars));
            signed char v = lit > 0 ? 1 : 0;
            if (value[var] != -1 && value[var] != v)
                throw std::runtime_error("model assigns variable " + std::to_string(var) +
                                         " both ways");
            value[var] = v;
        }
    }
    if (unsat_claim) throw std::runtime_error("parse_model: output claims UNSATISFIABLE");
    std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
    for (int v = 1; v <= num_vars; ++v) {
        if (value[v] == -1)
            throw std::runtime_error("truncated model: variable " + std::to_string(v) +
                                     " unassigned");
        model[v] = value[v] == 1;
    }
    return model;
}

// ---------------------------------------------------------------------------
// Built-in solver: CDCL with two watched literals, activity-driven decisions,
// first-UIP learning, geometric restarts and phase saving. Deterministic.
// ---------------------------------------------------------------------------
class CdclSolver {
public:
    enum class Status { Sat, Unsat, Unknown };

    explicit CdclSolver(int num_vars)
        : nvars_(num_vars),
          assign_(static_cast<std::size_t>(num_vars) + 1, 0),
          level_(static_cast<std::size_t>(num_vars) + 1, 0),
          reason_(static_cast<std::size_t>(num_vars) + 1, -1),
          activity_(static_cast<std::size_t>(num_vars) + 1, 0.0),
          phase_(static_cast<std::size_t>(num_vars) + 1, false),
          watches_(2 * static_cast<std::size_t>(num_vars) + 2) {}

    void add_clause(std::vector<int> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == -lits[i + 1]) return;  // tautology
        if (lits.empty()) {
            contradiction_ = true;
            return;
        }
        if (lits.size() == 1) {
            units_.push_back(lits[0]);
            return;
        }
        attach(std::move(lits));
    }

    Status solve(std::int64_t max_conflicts = -1) {
        if (contradiction_) return Status::Unsat;
        for (int lit : units_)
            if (!enqueue(lit, -1)) return Status::Unsat;
        units_.clear();
        if (propagate() != -1) return Status::Unsat;

        std::int64_t conflicts = 0;
        std::int64_t restart_limit = 100;
        std::int64_t restart_count = 0;
        for (;;) {
            int confl = propagate();
            if (confl != -1) {
                ++conflicts;
                ++restart_count;
                if (max_conflicts >= 0 && conflicts > max_conflicts) return Status::Unknown;
                if (decision_level() == 0) return Status::Unsat;
                std::vector<int> learnt;
                int back_level = analyze(confl, learnt);
                backtrack(back_level);
                if (learnt.size() == 1) {
                    if (!enqueue(learnt[0], -1)) return Status::Unsat;
                } else {
                    int idx = attach(std::move(learnt));
                    enqueue(clauses_[idx][0], idx);
                }
                decay_activities();
            } else {
                if (restart_count >= restart_limit) {
                    restart_count = 0;
                    restart_limit = restart_limit * 3 / 2;
                    backtrack(0);
                    continue;
                }
                int var = pick_branch_var();
                if (var == 0) return Status::Sat;
                trail_lim_.push_back(static_cast<int>(trail_.size()));
                enqueue(phase_[var] ? var : -var, -1);
            }
        }
    }

    bool value(int var) const { return assign_[var] > 0; }

    std::vector<bool> model() const {
        std::vector<bool> m(static_cast<std::size_t>(nvars_) + 1, false);
        for (int v = 1; v <= nvars_; ++v) m[v] = assign_[v] > 0;
        return m;
    }

private:
    static std::size_t watch_index(int lit) {
        return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit > 0 ? 0 : 1);
    }

    int attach(std::vector<int> lits) {
        int idx = static_cast<int>(clauses_.size());
        watches_[watch_index(-lits[0])].push_back(idx);
        watches_[watch_index(-lits[1])].push_back(idx);
        clauses_.push_back(std::move(lits));
        return idx;
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    signed char lit_value(int lit) const {
        signed char v = assign_[std::abs(lit)];
        if (v == 0) return 0;
        return (lit > 0) == (v > 0) ? 1 : -1;
    }

    bool enqueue(int lit, int reason) {
        signed char v = lit_value(lit);
        if (v == 1) return true;
        if (v == -1) return false;
        int var = std::abs(lit);
        assign_[var] = lit > 0 ? 1 : -1;
        level_[var] = decision_level();
        reason_[var] = reason;
        phase_[var] = lit > 0;
        trail_.push_back(lit);
        return true;
    }

    // Returns conflicting clause index, or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            int lit = trail_[qhead_++];
            auto& wl = watches_[watch_index(lit)];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < wl.size(); ++i) {
                int ci = wl[i];
                auto& clause = clauses_[ci];
                // Make sure the falsified literal sits at position 1.
                if (clause[0] == -lit) std::swap(clause[0], clause[1]);
                if (lit_value(clause[0]) == 1) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < clause.size(); ++k) {
                    if (lit_value(clause[k]) != -1) {
                        std::swap(clause[1], clause[k]);
                        watches_[watch_index(-clause[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                wl[keep++] = ci;
                if (!enqueue(clause[0], ci)) {
                    for (std::size_t j = i + 1; j < wl.size(); ++j) wl[keep++] = wl[j];
                    wl.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
            }
            wl.resize(keep);
        }
        return -1;
    }

    int analyze(int confl, std::vector<int>& learnt) {
        learnt.push_back(0);  // placeholder for the asserting literal
        std::vector<bool> seen(static_cast<std::size_t>(nvars_) + 1, false);
        int counter = 0;
        int lit = 0;
        std::size_t index = trail_.size();

        for (;;) {
            for (std::size_t k = lit == 0 ? 0 : 1; k < clauses_[confl].size(); ++k) {
                int q = clauses_[confl][k];
                int var = std::abs(q);
                if (seen[var] || level_[var] == 0) continue;
                seen[var] = true;
                bump_activity(var);
                if (level_[var] == decision_level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            do {
                lit = trail_[--index];
            } while (!seen[std::abs(lit)]);
            seen[std::abs(lit)] = false;
            --counter;
            if (counter == 0) break;
            confl = reason_[std::abs(lit)];
        }
        learnt[0] = -lit;

        int back = 0;
        if (learnt.size() > 1) {
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i)
                if (level_[std::abs(learnt[i])] > level_[std::abs(learnt[max_i])]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            back = level_[std::abs(learnt[1])];
        }
        return back;
    }

    void backtrack(int target_level) {
        if (decision_level() <= target_level) return;
        std::size_t lim = static_cast<std::size_t>(trail_lim_[target_level]);
        for (std::size_t i = trail_.size(); i-- > lim;) assign_[std::abs(trail_[i])] = 0;
        trail_.resize(lim);
        trail_lim_.resize(target_level);
        qhead_ = trail_.size();
    }

    void bump_activity(int var) {
        activity_[var] += activity_inc_;
        if (activity_[var] > 1e100) {
            for (int v = 1; v <= nvars_; ++v) activity_[v] *= 1e-100;
            activity_inc_ *= 1e-100;
        }
    }

    void decay_activities() { activity_inc_ *= 1.05; }

    int pick_branch_var() {
        int best = 0;
        double best_act = -1.0;
        for (int v = 1; v <= nvars_; ++v)
            if (assign_[v] == 0 && activity_[v] > best_act) {
                best = v;
                best_act = activity_[v];
            }
        return best;
    }

    int nvars_;
    double activity_inc_ = 1.0;
    bool contradiction_ = false;
    std::vector<int> units_;
    std::vector<std::vector<int>> clauses_;
    std::vector<signed char> assign_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<bool> phase_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
};

// ---------------------------------------------------------------------------
// Solve dispatch: built-in solver or an external command.
// ---------------------------------------------------------------------------

struct SolveResult {
    enum class Status { Sat, Unsat, Unknown };
    Status status = Status::Unknown;
    std::vector<bool> model;  // 1-based, meaningful for Sat
    std::string diagnostics;
};

// External command template: "{cnf}" is replaced by the DIMACS path. The
// LINLAY_SAT_CMD environment variable supplies a default template.
struct SolverBackend {
    bool use_external = false;
    std::string command_template;
    int timeout_seconds = 0;              // 0 = none; external runs under timeout(1)
    std::int64_t builtin_max_conflicts = -1;  // -1 = unbounded

    static SolverBackend builtin() { return {}; }
    static SolverBackend external(std::string cmd_template) {
        return {true, std::move(cmd_template), 0, -1};
    }
    static SolverBackend from_environment() {
        if (const char* cmd = std::getenv("LINLAY_SAT_CMD")) return external(cmd);
        return builtin();
    }
};

inline SolveResult solve_builtin(const CnfInstance& cnf, std::int64_t max_conflicts = -1) {
    SolveResult res;
    if (cnf.num_vars == 0) {
        res.status = cnf.clauses.empty() ? SolveResult::Status::Sat : SolveResult::Status::Unsat;
        res.model.assign(1, false);
        return res;
    }
    CdclSolver solver(cnf.num_vars);
    for (const auto& clause : cnf.clauses) solver.add_clause(clause);
    switch (solver.solve(max_conflicts)) {
        case CdclSolver::Status::Sat:
            res.status = SolveResult::Status::Sat;
            res.model = solver.model();
            break;
        case CdclSolver::Status::Unsat: res.status = SolveResult::Status::Unsat; break;
        case CdclSolver::Status::Unknown:
            res.status = SolveResult::Status::Unknown;
            res.diagnostics = "conflict budget exhausted";
            break;
    }
    return res;
}

inline SolveResult solve_external(const CnfInstance& cnf, const SolverBackend& backend) {
    SolveResult res;
    char path[] = "/tmp/linlay_cnf_XXXXXX";
    int fd = mkstemp(path);
    if (fd < 0) {
        res.diagnostics = "cannot create temporary DIMACS file";
        return res;
    }
    {
        std::ofstream out(path);
        write_dimacs(cnf, out);
    }
    close(fd);

    std::string cmd = backend.command_template;
    const std::string placeholder = "{cnf}";
    if (auto pos = cmd.find(placeholder); pos != std::string::npos)
        cmd.replace(pos, placeholder.size(), path);
    else
        cmd += std::string(" ") + path;
    if (backend.timeout_seconds > 0)
        cmd = "timeout " + std::to_string(backend.timeout_seconds) + " " + cmd;

    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::remove(path);
        res.diagnostics = "failed to run: " + cmd;
        return res;
    }
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int rc = pclose(pipe);
    std::remove(path);

    int exit_code = -1;
    if (rc >= 0) exit_code = WEXITSTATUS(rc);
    bool says_sat = output.find("s SATISFIABLE") != std::string::npos ||
                    output.rfind("SAT", 0) == 0 || output.find("\nSAT") != std::string::npos;
    bool says_unsat = output.find("s UNSATISFIABLE") != std::string::npos ||
                      output.rfind("UNSAT", 0) == 0 ||
                      output.find("\nUNSAT") != std::string::npos;
    if (says_unsat || exit_code == 20) {
        res.status = SolveResult::Status::Unsat;
        return res;
    }
    if (says_sat || exit_code == 10) {
        res.status = SolveResult::Status::Sat;
        res.model = parse_model(output, cnf.num_vars);
        return res;
    }
    res.status = SolveResult::Status::Unknown;
    res.diagnostics = "external solver gave no verdict (exit " + std::to_string(exit_code) +
                      "): " + output.substr(0, 400);
    return res;
}

inline SolveResult solve(const CnfInstance& cnf, const SolverBackend& backend = {}) {
    if (backend.use_external) return solve_external(cnf, backend);
    return solve_builtin(cnf, backend.builtin_max_conflicts);
}

}  // namespace linlay

#endif
