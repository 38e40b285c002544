#include "symmset/symset.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace symmset {

bool payload_less(const Payload& a, const Payload& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* e = std::get_if<EdgeSet>(&a)) return e->edges < std::get<EdgeSet>(b).edges;
    if (const auto* p = std::get_if<Blocks>(&a)) return p->class_of < std::get<Blocks>(b).class_of;
    if (const auto* c = std::get_if<Coloring>(&a)) return c->colors < std::get<Coloring>(b).colors;
    if (std::holds_alternative<Sentinel>(a)) return false;
    return std::get<Atom>(a).value < std::get<Atom>(b).value;
}

std::vector<Structure> SymSet::enumerate_structures(const FinSet& A, std::uint64_t guard) const {
    std::uint64_t n = structure_count(A);
    require(n <= guard, name() + ": enumeration guard exceeded (" + std::to_string(n) +
                            " structures on a " + std::to_string(A.size) + "-point carrier)");
    std::vector<Structure> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(structure_at(A, i));
    return out;
}

void SymSet::for_each_structure(const FinSet& A, const std::function<bool(const Structure&)>& fn) const {
    std::uint64_t n = structure_count(A);
    for (std::uint64_t i = 0; i < n; ++i)
        if (!fn(structure_at(A, i))) return;
}

void SymSet::check_args(const Structure& x, const FinFn& alpha) const {
    require(x.owner == name(), name() + ": structure belongs to " + x.owner);
    require(alpha.cod == x.carrier, name() + ": pullback map codomain must equal the carrier");
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

// Shared cache of restricted growth strings per carrier size.
const std::vector<std::vector<int>>& rgs_list(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    require(n >= 1 && n <= 12, "partition enumeration limited to carriers of size <= 12");
    std::vector<std::vector<int>> list;
    for_each_partition(FinSet(n), [&](const EquivRel& r) { list.push_back(r.class_of); });
    return cache.emplace(n, std::move(list)).first->second;
}

int rgs_class_count(const std::vector<int>& rgs) {
    return *std::max_element(rgs.begin(), rgs.end()) + 1;
}

std::vector<int> pullback_rgs(const std::vector<int>& class_of, const FinFn& alpha) {
    std::vector<int> labels(static_cast<std::size_t>(alpha.dom.size));
    for (int i = 0; i < alpha.dom.size; ++i)
        labels[static_cast<std::size_t>(i)] = class_of[static_cast<std::size_t>(alpha(i))];
    return equiv_from_labels(alpha.dom, labels).class_of;
}

class GraphSymSet final : public SymSet {
public:
    GraphSymSet() : SymSet("graph") {}

    std::uint64_t structure_count(const FinSet& A) const override {
        require(A.size <= 11, "graph: carriers limited to 11 points");
        int pairs = A.size * (A.size - 1) / 2;
        return std::uint64_t{1} << pairs;
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        require(index < structure_count(A), "graph: structure index out of range");
        auto pairs = all_pairs(A.size);
        EdgeSet e;
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (index >> j & 1) e.edges.push_back(pairs[j]);
        return Structure{name(), A, std::move(e)};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        const auto& src = std::get<EdgeSet>(x.payload).edges;
        EdgeSet out;
        for (int u = 0; u < alpha.dom.size; ++u)
            for (int v = u + 1; v < alpha.dom.size; ++v) {
                int a = alpha(u), b = alpha(v);
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                if (std::binary_search(src.begin(), src.end(), std::make_pair(a, b)))
                    out.edges.emplace_back(u, v);
            }
        return Structure{name(), alpha.dom, std::move(out)};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        auto* e = std::get_if<EdgeSet>(&payload);
        require(e != nullptr, "graph: payload must be an edge set");
        for (auto& [u, v] : e->edges) {
            require(u >= 0 && u < A.size && v >= 0 && v < A.size, "graph: edge endpoint out of range");
            require(u != v, "graph: loops are not allowed");
            if (u > v) std::swap(u, v);
        }
        std::sort(e->edges.begin(), e->edges.end());
        e->edges.erase(std::unique(e->edges.begin(), e->edges.end()), e->edges.end());
        return Structure{name(), A, std::move(payload)};
    }
};

class EqSymSet final : public SymSet {
public:
    EqSymSet() : SymSet("eq") {}

    std::uint64_t structure_count(const FinSet& A) const override {
        return static_cast<std::uint64_t>(rgs_list(A.size).size());
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        const auto& list = rgs_list(A.size);
        require(index < list.size(), "eq: structure index out of range");
        return Structure{name(), A, Blocks{list[static_cast<std::size_t>(index)]}};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        return Structure{name(), alpha.dom, Blocks{pullback_rgs(std::get<Blocks>(x.payload).class_of, alpha)}};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        auto* p = std::get_if<Blocks>(&payload);
        require(p != nullptr, "eq: payload must be a partition");
        return Structure{name(), A, Blocks{equiv_from_labels(A, p->class_of).class_of}};
    }
};

class RepresentableSymSet final : public SymSet {
public:
    explicit RepresentableSymSet(FinSet S)
        : SymSet("representable(" + std::to_string(S.size) + ")"), s_(std::move(S)) {}

    std::uint64_t structure_count(const FinSet& A) const override {
        std::uint64_t n = 1;
        for (int i = 0; i < A.size; ++i) {
            require(n <= (std::uint64_t{1} << 60) / static_cast<std::uint64_t>(s_.size),
                    name() + ": structure count overflow");
            n *= static_cast<std::uint64_t>(s_.size);
        }
        return n;
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        require(index < structure_count(A), name() + ": structure index out of range");
        Coloring c;
        c.colors.assign(static_cast<std::size_t>(A.size), 0);
        for (int i = A.size - 1; i >= 0; --i) {
            c.colors[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(s_.size));
            index /= static_cast<std::uint64_t>(s_.size);
        }
        return Structure{name(), A, std::move(c)};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        const auto& src = std::get<Coloring>(x.payload).colors;
        Coloring out;
        out.colors.reserve(static_cast<std::size_t>(alpha.dom.size));
        for (int i = 0; i < alpha.dom.size; ++i)
            out.colors.push_back(src[static_cast<std::size_t>(alpha(i))]);
        return Structure{name(), alpha.dom, std::move(out)};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        auto* c = std::get_if<Coloring>(&payload);
        require(c != nullptr, name() + ": payload must be a coloring");
        require(static_cast<int>(c->colors.size()) == A.size, name() + ": coloring length must equal carrier size");
        for (int v : c->colors)
            require(v >= 0 && v < s_.size, name() + ": color out of range");
        return Structure{name(), A, std::move(payload)};
    }

private:
    FinSet s_;
};

// Partitions with exactly l+1 blocks plus the absorbing sentinel. Pulling a
// partition back below l+1 blocks yields the sentinel; the sentinel pulls
// back to itself.
class EqExactSymSet final : public SymSet {
public:
    explicit EqExactSymSet(int l) : SymSet("eq_exact(" + std::to_string(l) + ")"), l_(l) {
        require(l >= 1, "eq_exact: level must be at least 1");
    }

    std::uint64_t structure_count(const FinSet& A) const override {
        return static_cast<std::uint64_t>(filtered(A.size).size()) + 1;
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        const auto& list = filtered(A.size);
        require(index < list.size() + 1, name() + ": structure index out of range");
        if (index == list.size()) return Structure{name(), A, Sentinel{}};
        return Structure{name(), A, Blocks{list[static_cast<std::size_t>(index)]}};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        if (std::holds_alternative<Sentinel>(x.payload)) return Structure{name(), alpha.dom, Sentinel{}};
        auto rgs = pullback_rgs(std::get<Blocks>(x.payload).class_of, alpha);
        if (rgs_class_count(rgs) != l_ + 1) return Structure{name(), alpha.dom, Sentinel{}};
        return Structure{name(), alpha.dom, Blocks{std::move(rgs)}};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        if (std::holds_alternative<Sentinel>(payload)) return Structure{name(), A, Sentinel{}};
        auto* p = std::get_if<Blocks>(&payload);
        require(p != nullptr, name() + ": payload must be a partition or the sentinel");
        auto rgs = equiv_from_labels(A, p->class_of).class_of;
        require(rgs_class_count(rgs) == l_ + 1, name() + ": partition must have exactly " +
                                                    std::to_string(l_ + 1) + " blocks");
        return Structure{name(), A, Blocks{std::move(rgs)}};
    }

private:
    const std::vector<std::vector<int>>& filtered(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        std::vector<std::vector<int>> list;
        for (const auto& rgs : rgs_list(n))
            if (rgs_class_count(rgs) == l_ + 1) list.push_back(rgs);
        return cache_.emplace(n, std::move(list)).first->second;
    }

    int l_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<std::vector<int>>> cache_;
};

class EqLeqSymSet final : public SymSet {
public:
    explicit EqLeqSymSet(int l) : SymSet("eq_leq(" + std::to_string(l) + ")"), l_(l) {
        require(l >= 1, "eq_leq: level must be at least 1");
    }

    std::uint64_t structure_count(const FinSet& A) const override {
        return static_cast<std::uint64_t>(filtered(A.size).size());
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        const auto& list = filtered(A.size);
        require(index < list.size(), name() + ": structure index out of range");
        return Structure{name(), A, Blocks{list[static_cast<std::size_t>(index)]}};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        auto rgs = pullback_rgs(std::get<Blocks>(x.payload).class_of, alpha);
        ensure(rgs_class_count(rgs) <= l_, name() + ": pullback left the instance");
        return Structure{name(), alpha.dom, Blocks{std::move(rgs)}};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        auto* p = std::get_if<Blocks>(&payload);
        require(p != nullptr, name() + ": payload must be a partition");
        auto rgs = equiv_from_labels(A, p->class_of).class_of;
        require(rgs_class_count(rgs) <= l_, name() + ": partition must have at most " +
                                                std::to_string(l_) + " blocks");
        return Structure{name(), A, Blocks{std::move(rgs)}};
    }

private:
    const std::vector<std::vector<int>>& filtered(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        std::vector<std::vector<int>> list;
        for (const auto& rgs : rgs_list(n))
            if (rgs_class_count(rgs) <= l_) list.push_back(rgs);
        return cache_.emplace(n, std::move(list)).first->second;
    }

    int l_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<std::vector<int>>> cache_;
};

class DiscreteSymSet final : public SymSet {
public:
    explicit DiscreteSymSet(FinSet X)
        : SymSet("discrete(" + std::to_string(X.size) + ")"), x_(std::move(X)) {}

    std::uint64_t structure_count(const FinSet&) const override {
        return static_cast<std::uint64_t>(x_.size);
    }

    Structure structure_at(const FinSet& A, std::uint64_t index) const override {
        require(index < static_cast<std::uint64_t>(x_.size), name() + ": structure index out of range");
        return Structure{name(), A, Atom{static_cast<int>(index)}};
    }

    Structure pullback(const Structure& x, const FinFn& alpha) const override {
        check_args(x, alpha);
        return Structure{name(), alpha.dom, x.payload};
    }

    Structure from_payload(const FinSet& A, Payload payload) const override {
        auto* a = std::get_if<Atom>(&payload);
        require(a != nullptr, name() + ": payload must be a point label");
        require(a->value >= 0 && a->value < x_.size, name() + ": point label out of range");
        return Structure{name(), A, std::move(payload)};
    }

private:
    FinSet x_;
};

}  // namespace

SymSetPtr graph_symset() {
    static const SymSetPtr instance = std::make_shared<GraphSymSet>();
    return instance;
}

SymSetPtr eq_symset() {
    static const SymSetPtr instance = std::make_shared<EqSymSet>();
    return instance;
}

SymSetPtr representable_symset(const FinSet& S) { return std::make_shared<RepresentableSymSet>(S); }

SymSetPtr eq_exact_symset(int l) { return std::make_shared<EqExactSymSet>(l); }

SymSetPtr eq_leq_symset(int l) { return std::make_shared<EqLeqSymSet>(l); }

SymSetPtr discrete_symset(const FinSet& X) { return std::make_shared<DiscreteSymSet>(X); }

namespace detail {

SymSetPtr make_basic_symset(const std::string& desc) {
    if (desc == "graph") return graph_symset();
    if (desc == "eq") return eq_symset();
    auto open = desc.find('(');
    require(open != std::string::npos && desc.back() == ')',
            "unknown symmetric set descriptor: " + desc);
    std::string head = desc.substr(0, open);
    std::string arg = desc.substr(open + 1, desc.size() - open - 2);
    int n = 0;
    try {
        n = std::stoi(arg);
    } catch (const std::exception&) {
        throw DomainError("bad argument in symmetric set descriptor: " + desc);
    }
    if (head == "eq_exact") return eq_exact_symset(n);
    if (head == "eq_leq") return eq_leq_symset(n);
    if (head == "representable") return representable_symset(FinSet(n));
    if (head == "discrete") return discrete_symset(FinSet(n));
    throw DomainError("unknown symmetric set descriptor: " + desc);
}

}  // namespace detail

}  // namespace symmset
