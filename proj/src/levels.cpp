#include "symmset/levels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "symmset/ez.hpp"

namespace symmset {

namespace {

int face_index(int elem, int removed) { return elem - (elem > removed ? 1 : 0); }

class SkeletonSymSet final : public SymSet {
public:
    SkeletonSymSet(SymSetPtr inner, int l, std::uint64_t scan_guard)
        : SymSet("sk_" + std::to_string(l) + "(" + inner->name() + ")"),
          inner_(std::move(inner)),
          l_(l),
          scan_guard_(scan_guard) {
        require(l_ >= 0, "skeleton_symset: level must be non-negative");
    }

    std::uint64_t structure_count(const FinSet& A) const override {
        return static_cast<std::uint64_t>(members(A.size).size());
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        const auto& list = members(A.size);
        require(index < list.size(), name() + ": structure index out of range");
        Structure x = inner_->structure_at(A, list[static_cast<std::size_t>(index)]);
        return Structure{name(), x.carrier, std::move(x.payload)};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        Structure bare{inner_->name(), x.carrier, x.payload};
        Structure y = inner_->pullback(bare, alpha);
        return Structure{name(), y.carrier, std::move(y.payload)};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        Structure x = inner_->from_payload(A, std::move(payload));
        require(mass(*inner_, x) <= l_ + 1, name() + ": structure mass exceeds " + std::to_string(l_ + 1));
        return Structure{name(), x.carrier, std::move(x.payload)};
    }

private:
    const std::vector<std::uint64_t>& members(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        FinSet A(n);
        std::uint64_t total = inner_->structure_count(A);
        require(total <= scan_guard_, name() + ": membership scan guard exceeded");
        std::vector<std::uint64_t> list;
        for (std::uint64_t i = 0; i < total; ++i)
            if (mass(*inner_, inner_->structure_at(A, i)) <= l_ + 1) list.push_back(i);
        return cache_.emplace(n, std::move(list)).first->second;
    }

    SymSetPtr inner_;
    int l_;
    std::uint64_t scan_guard_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<std::uint64_t>> cache_;
};

// DFS over face assignments with incremental cycle-equation pruning.
// pb[s][j] is faces_list[s] pulled back along δ^j. fn receives the indices
// of a complete valid assignment.
void for_each_valid_cycle(int k, const std::vector<Structure>& faces_list,
                          const std::vector<std::vector<Structure>>& pb,
                          const std::function<void(const std::vector<int>&)>& fn) {
    int points = k + 1;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(points));

    std::function<void()> descend = [&]() {
        if (static_cast<int>(chosen.size()) == points) {
            fn(chosen);
            return;
        }
        int j = static_cast<int>(chosen.size());
        for (int s = 0; s < static_cast<int>(faces_list.size()); ++s) {
            bool ok = true;
            if (k >= 2) {
                for (int i = 0; i < j && ok; ++i)
                    ok = pb[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(face_index(j, i))] ==
                        pb[static_cast<std::size_t>(s)][static_cast<std::size_t>(face_index(i, j))];
            }
            if (!ok) continue;
            chosen.push_back(s);
            descend();
            chosen.pop_back();
        }
    };
    descend();
}

struct CycleTables {
    std::vector<Structure> faces_list;
    std::vector<std::vector<Structure>> pb;
    std::map<std::vector<int>, std::vector<std::uint64_t>> fillers_by_faces;
};

CycleTables build_cycle_tables(const SymSet& M, int k, std::uint64_t guard) {
    CycleTables t;
    FinSet face_carrier(k);
    FinSet P(k + 1);
    require(M.structure_count(face_carrier) <= guard && M.structure_count(P) <= guard,
            M.name() + ": structure count exceeds the cycle enumeration guard");

    t.faces_list = M.enumerate_structures(face_carrier, guard);
    if (k >= 2) {
        t.pb.resize(t.faces_list.size());
        for (std::size_t s = 0; s < t.faces_list.size(); ++s) {
            t.pb[s].reserve(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j)
                t.pb[s].push_back(M.pullback(t.faces_list[s], delta(face_carrier, j)));
        }
    }

    std::map<Structure, int> face_pos;
    for (std::size_t s = 0; s < t.faces_list.size(); ++s)
        face_pos.emplace(t.faces_list[s], static_cast<int>(s));

    std::uint64_t total = M.structure_count(P);
    for (std::uint64_t i = 0; i < total; ++i) {
        Structure f = M.structure_at(P, i);
        std::vector<int> key(static_cast<std::size_t>(k + 1));
        for (int p = 0; p <= k; ++p) {
            auto it = face_pos.find(M.pullback(f, delta(P, p)));
            ensure(it != face_pos.end(), M.name() + ": restriction escaped the face enumeration");
            key[static_cast<std::size_t>(p)] = it->second;
        }
        t.fillers_by_faces[key].push_back(i);
    }
    return t;
}

}  // namespace

SymSetPtr skeleton_symset(SymSetPtr inner, int l, std::uint64_t scan_guard) {
    require(inner != nullptr, "skeleton_symset: missing inner instance");
    return std::make_shared<SkeletonSymSet>(std::move(inner), l, scan_guard);
}

SymSetPtr make_symset(const std::string& desc) {
    if (desc.rfind("sk_", 0) == 0) {
        auto open = desc.find('(');
        require(open != std::string::npos && desc.back() == ')',
                "unknown symmetric set descriptor: " + desc);
        int l = 0;
        try {
            l = std::stoi(desc.substr(3, open - 3));
        } catch (const std::exception&) {
            throw DomainError("bad level in symmetric set descriptor: " + desc);
        }
        return skeleton_symset(make_symset(desc.substr(open + 1, desc.size() - open - 2)), l);
    }
    return detail::make_basic_symset(desc);
}

bool is_l_skeletal(const SymSet& M, int l, int size_bound) {
    require(size_bound >= 1, "is_l_skeletal: size bound must be at least 1");
    for (int n = 1; n <= size_bound; ++n) {
        FinSet A(n);
        std::uint64_t count = M.structure_count(A);
        for (std::uint64_t i = 0; i < count; ++i)
            if (mass(M, M.structure_at(A, i)) > l + 1) return false;
    }
    return true;
}

bool skeleton_membership(const SymSet& M, int l, const Structure& x) { return mass(M, x) <= l + 1; }

CoskeletalityCheck check_coskeletality(const SymSetPtr& M, int l, int k_bound,
                                       std::uint64_t carrier_guard) {
    require(M != nullptr, "check_coskeletality: missing symmetric set");
    require(l >= 0, "check_coskeletality: level must be non-negative");
    CoskeletalityCheck result;
    for (int k = l + 1; k <= k_bound && result.passed; ++k) {
        CycleTables t = build_cycle_tables(*M, k, carrier_guard);
        FinSet P(k + 1);
        for_each_valid_cycle(k, t.faces_list, t.pb, [&](const std::vector<int>& key) {
            if (!result.passed) return;
            ++result.cycles_checked;
            auto it = t.fillers_by_faces.find(key);
            std::uint64_t fillers = it == t.fillers_by_faces.end() ? 0 : it->second.size();
            if (fillers != 1) {
                result.passed = false;
                result.failed_k = k;
                result.counterexample_fillers = fillers;
                std::vector<Structure> faces;
                faces.reserve(key.size());
                for (int s : key) faces.push_back(t.faces_list[static_cast<std::size_t>(s)]);
                result.counterexample = Cycle{M, P, std::move(faces)};
            }
        });
    }
    return result;
}

bool is_l_coskeletal(const SymSetPtr& M, int l, int k_bound, std::uint64_t carrier_guard) {
    return check_coskeletality(M, l, k_bound, carrier_guard).passed;
}

Cycle lower_bound_cycle(int l) {
    require(l >= 1, "lower_bound_cycle: level must be at least 1");
    require(l <= 6, "lower_bound_cycle: level too large for partition enumeration");
    SymSetPtr M = eq_exact_symset(l);

    if (l == 1) {
        FinSet P(3);
        std::vector<Structure> faces;
        for (int p = 0; p < 3; ++p)
            faces.push_back(M->from_payload(remove_element(P, p), Blocks{{0, 1}}));
        return validate_cycle(M, P, std::move(faces));
    }

    if (l == 2) {
        // P = Z/5Z; c_p joins p-1 and p+1 and keeps the rest separate.
        FinSet P(5, {"0", "1", "2", "3", "4"});
        std::vector<Structure> faces;
        for (int p = 0; p < 5; ++p) {
            int lo = (p + 4) % 5, hi = (p + 1) % 5;
            std::vector<int> labels;
            for (int o = 0; o < 5; ++o) {
                if (o == p) continue;
                labels.push_back((o == lo || o == hi) ? std::min(lo, hi) : o);
            }
            faces.push_back(M->from_payload(remove_element(P, p),
                                            Blocks{equiv_from_labels(FinSet(4), labels).class_of}));
        }
        return validate_cycle(M, P, std::move(faces));
    }

    // l >= 3: P = A ⊔ B with |A| = |B| = l; c_p groups the rest of p's half.
    std::vector<std::string> names;
    for (int i = 1; i <= l; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= l; ++i) names.push_back("b" + std::to_string(i));
    FinSet P(2 * l, std::move(names));
    std::vector<Structure> faces;
    for (int p = 0; p < 2 * l; ++p) {
        bool p_in_a = p < l;
        std::vector<int> labels;
        for (int o = 0; o < 2 * l; ++o) {
            if (o == p) continue;
            bool o_in_a = o < l;
            labels.push_back(o_in_a == p_in_a ? (p_in_a ? -1 : -2) : o);
        }
        faces.push_back(M->from_payload(remove_element(P, p),
                                        Blocks{equiv_from_labels(FinSet(2 * l - 1), labels).class_of}));
    }
    return validate_cycle(M, P, std::move(faces));
}

LowerBoundCertificate verify_lower_bound(int l, std::uint64_t guard) {
    LowerBoundCertificate cert;
    cert.level = l;
    cert.cycle = lower_bound_cycle(l);
    cert.k = cert.cycle.k();
    cert.search_size = cert.cycle.symset->structure_count(cert.cycle.P);
    cert.filler_count = brute_force_fillers(cert.cycle, guard).size();
    ReductionGraph rg = reduction_graph(cert.cycle);
    cert.reduction_graph_propagative =
        rg.upper_subgraph.n() >= 2 && is_propagative(rg.upper_subgraph);
    return cert;
}

int claimed_aufhebung(int l) {
    require(l >= 0, "claimed_aufhebung: level must be non-negative");
    if (l == 0) return 1;
    if (l == 1) return 2;
    if (l == 2) return 4;
    return 2 * l - 1;
}

bool AufhebungReport::passed() const {
    if (!lower_bound.passed()) return false;
    for (const auto& check : upper_bound_checks)
        if (!check.all_uniquely_filled) return false;
    return true;
}

namespace {

// One tested cycle: exactly one filler, degenerate, and reproduced by the
// constructive algorithm.
bool check_unique_degenerate_filler(const Cycle& cycle, std::uint64_t brute_guard, std::string& note) {
    std::vector<Structure> fillers = brute_force_fillers(cycle, brute_guard);
    if (fillers.size() != 1) {
        note = "expected exactly one filler, found " + std::to_string(fillers.size());
        return false;
    }
    if (!is_degenerate(*cycle.symset, fillers.front())) {
        note = "unique filler is not degenerate";
        return false;
    }
    Structure built = construct_degenerate_filler(cycle);
    if (!(built == fillers.front())) {
        note = "constructive filler differs from the brute-force filler";
        return false;
    }
    return true;
}

}  // namespace

AufhebungReport verify_aufhebung(int l, int k_bound, const AufhebungGuards& guards) {
    require(l >= 1, "verify_aufhebung: level must be at least 1");
    AufhebungReport report;
    report.level = l;
    report.claimed_value = claimed_aufhebung(l);
    report.k_bound = k_bound > 0 ? k_bound : report.claimed_value + 2;
    report.parameters = guards;
    report.lower_bound = verify_lower_bound(l, guards.brute_force_guard);

    struct Candidate {
        SymSetPtr instance;
        int carrier_max;
    };
    std::vector<Candidate> instances{
        {eq_exact_symset(l), guards.eq_carrier_max},
        {eq_leq_symset(l), guards.eq_carrier_max},
        {skeleton_symset(graph_symset(), l, guards.brute_force_guard), guards.graph_carrier_max},
    };

    std::mt19937_64 rng(guards.seed + static_cast<std::uint64_t>(l));

    for (const auto& [instance, carrier_max] : instances) {
        for (int k = report.claimed_value + 1; k <= report.k_bound; ++k) {
            UpperBoundCheck check;
            check.instance = instance->name();
            check.k = k;

            if (k + 1 > carrier_max) {
                check.mode = "skipped";
                check.note = "carrier guard";
                report.upper_bound_checks.push_back(std::move(check));
                continue;
            }

            FinSet P(k + 1);
            std::uint64_t face_count = instance->structure_count(FinSet(k));
            bool exhaustive = true;
            std::uint64_t families = 1;
            for (int i = 0; i <= k && exhaustive; ++i) {
                if (families > guards.exhaustive_family_guard / std::max<std::uint64_t>(face_count, 1))
                    exhaustive = false;
                else
                    families *= face_count;
            }
            exhaustive = exhaustive && families <= guards.exhaustive_family_guard &&
                         instance->structure_count(P) <= guards.brute_force_guard;

            if (exhaustive) {
                check.mode = "exhaustive";
                CycleTables t = build_cycle_tables(*instance, k, guards.brute_force_guard);
                for_each_valid_cycle(k, t.faces_list, t.pb, [&](const std::vector<int>& key) {
                    if (!check.all_uniquely_filled) return;
                    ++check.cycles_tested;
                    std::vector<Structure> faces;
                    faces.reserve(key.size());
                    for (int s : key) faces.push_back(t.faces_list[static_cast<std::size_t>(s)]);
                    Cycle cycle{instance, P, std::move(faces)};
                    std::string note;
                    if (!check_unique_degenerate_filler(cycle, guards.brute_force_guard, note)) {
                        check.all_uniquely_filled = false;
                        check.note = "k=" + std::to_string(k) + ": " + note;
                    }
                });
            } else {
                check.mode = "randomized";
                std::uint64_t total = instance->structure_count(P);
                for (int trial = 0; trial < guards.randomized_cycles_per_check; ++trial) {
                    Structure f = instance->structure_at(P, rng() % total);
                    Cycle cycle = restrict_to_cycle(instance, f);
                    ++check.cycles_tested;
                    std::string note;
                    if (!check_unique_degenerate_filler(cycle, guards.brute_force_guard, note)) {
                        check.all_uniquely_filled = false;
                        check.note = "k=" + std::to_string(k) + ": " + note;
                        break;
                    }
                }
            }
            report.upper_bound_checks.push_back(std::move(check));
        }
    }
    return report;
}

}  // namespace symmset
