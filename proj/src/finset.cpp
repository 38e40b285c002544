#include "symmset/finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symmset {

FinSet::FinSet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
    require(size >= 1, "FinSet: size must be at least 1");
    require(labels.empty() || static_cast<int>(labels.size()) == size,
            "FinSet: label count must match size");
}

std::string FinSet::display(int i) const {
    if (!labels.empty()) return labels[static_cast<std::size_t>(i)];
    return std::to_string(i);
}

FinSet remove_element(const FinSet& A, int a) {
    require(a >= 0 && a < A.size, "remove_element: element out of range");
    require(A.size >= 2, "remove_element: cannot remove from a singleton");
    std::vector<std::string> names;
    if (!A.labels.empty()) {
        names.reserve(static_cast<std::size_t>(A.size) - 1);
        for (int i = 0; i < A.size; ++i)
            if (i != a) names.push_back(A.labels[static_cast<std::size_t>(i)]);
    }
    return FinSet(A.size - 1, std::move(names));
}

FinFn::FinFn(FinSet dom_, FinSet cod_, std::vector<int> images_)
    : dom(std::move(dom_)), cod(std::move(cod_)), images(std::move(images_)) {
    require(static_cast<int>(images.size()) == dom.size, "FinFn: image list length must equal domain size");
    for (int v : images)
        require(v >= 0 && v < cod.size, "FinFn: image index out of range");
}

FinFn identity(const FinSet& A) {
    std::vector<int> im(static_cast<std::size_t>(A.size));
    std::iota(im.begin(), im.end(), 0);
    return FinFn(A, A, std::move(im));
}

FinFn compose(const FinFn& f, const FinFn& g) {
    require(g.cod == f.dom, "compose: domain mismatch");
    std::vector<int> im(g.images.size());
    for (std::size_t i = 0; i < g.images.size(); ++i) im[i] = f.images[static_cast<std::size_t>(g.images[i])];
    return FinFn(g.dom, f.cod, std::move(im));
}

bool is_surjective(const FinFn& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.cod.size), 0);
    for (int v : f.images) hit[static_cast<std::size_t>(v)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const FinFn& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.cod.size), 0);
    for (int v : f.images) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

std::pair<FinFn, FinFn> epi_mono_factorize(const FinFn& f) {
    std::vector<int> image_elems;                      // in order of first preimage
    std::vector<int> pos(static_cast<std::size_t>(f.cod.size), -1);
    std::vector<int> epi_im(f.images.size());
    for (std::size_t i = 0; i < f.images.size(); ++i) {
        int v = f.images[i];
        if (pos[static_cast<std::size_t>(v)] < 0) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(image_elems.size());
            image_elems.push_back(v);
        }
        epi_im[i] = pos[static_cast<std::size_t>(v)];
    }
    std::vector<std::string> names;
    if (!f.cod.labels.empty()) {
        names.reserve(image_elems.size());
        for (int v : image_elems) names.push_back(f.cod.labels[static_cast<std::size_t>(v)]);
    }
    FinSet image(static_cast<int>(image_elems.size()), std::move(names));
    FinFn epi(f.dom, image, std::move(epi_im));
    FinFn mono(image, f.cod, std::move(image_elems));
    return {std::move(epi), std::move(mono)};
}

FinFn delta(const FinSet& A, int a) {
    require(A.size >= 2, "delta: faces of a point do not exist in F");
    require(a >= 0 && a < A.size, "delta: element out of range");
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(A.size) - 1);
    for (int i = 0; i < A.size; ++i)
        if (i != a) im.push_back(i);
    return FinFn(remove_element(A, a), A, std::move(im));
}

FinFn collapse(const FinSet& A, int a, int b) {
    require(a != b, "collapse: the two elements must differ");
    require(a >= 0 && a < A.size && b >= 0 && b < A.size, "collapse: element out of range");
    std::vector<int> im(static_cast<std::size_t>(A.size));
    for (int i = 0; i < A.size; ++i) {
        int target = (i == a) ? b : i;
        im[static_cast<std::size_t>(i)] = target - (target > a ? 1 : 0);
    }
    return FinFn(A, remove_element(A, a), std::move(im));
}

FinFn min_section(const FinFn& f) {
    require(is_surjective(f), "min_section: function is not surjective");
    std::vector<int> sec(static_cast<std::size_t>(f.cod.size), -1);
    for (int i = static_cast<int>(f.images.size()) - 1; i >= 0; --i)
        sec[static_cast<std::size_t>(f.images[static_cast<std::size_t>(i)])] = i;
    return FinFn(f.cod, f.dom, std::move(sec));
}

EquivRel::EquivRel(FinSet carrier_, std::vector<int> class_of_)
    : carrier(std::move(carrier_)), class_of(std::move(class_of_)) {
    require(static_cast<int>(class_of.size()) == carrier.size,
            "EquivRel: class list length must equal carrier size");
    int max_seen = -1;
    for (int c : class_of) {
        require(c >= 0 && c <= max_seen + 1, "EquivRel: class indexing is not canonical");
        max_seen = std::max(max_seen, c);
    }
}

int EquivRel::num_classes() const {
    return *std::max_element(class_of.begin(), class_of.end()) + 1;
}

std::vector<std::vector<int>> EquivRel::classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes()));
    for (int i = 0; i < carrier.size; ++i)
        out[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])].push_back(i);
    return out;
}

EquivRel equiv_from_labels(FinSet carrier, const std::vector<int>& labels) {
    require(static_cast<int>(labels.size()) == carrier.size,
            "equiv_from_labels: label count must equal carrier size");
    std::map<int, int> renumber;
    std::vector<int> canon(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = renumber.try_emplace(labels[i], static_cast<int>(renumber.size()));
        (void)fresh;
        canon[i] = it->second;
    }
    return EquivRel(std::move(carrier), std::move(canon));
}

FinFn quotient_map(const EquivRel& rel) {
    int m = rel.num_classes();
    std::vector<std::string> names;
    if (!rel.carrier.labels.empty()) {
        auto cls = rel.classes();
        names.reserve(static_cast<std::size_t>(m));
        for (const auto& c : cls) {
            std::string s = "{";
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += rel.carrier.labels[static_cast<std::size_t>(c[i])];
            }
            s += "}";
            names.push_back(std::move(s));
        }
    }
    return FinFn(rel.carrier, FinSet(m, std::move(names)), rel.class_of);
}

void for_each_function(const FinSet& A, const FinSet& B, const std::function<void(const FinFn&)>& fn) {
    std::vector<int> im(static_cast<std::size_t>(A.size), 0);
    while (true) {
        fn(FinFn(A, B, im));
        int i = A.size - 1;
        while (i >= 0 && im[static_cast<std::size_t>(i)] == B.size - 1) {
            im[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++im[static_cast<std::size_t>(i)];
    }
}

void for_each_surjection(const FinSet& A, const FinSet& B, const std::function<void(const FinFn&)>& fn) {
    if (B.size > A.size) return;
    for_each_function(A, B, [&](const FinFn& f) {
        if (is_surjective(f)) fn(f);
    });
}

void for_each_partition(const FinSet& A, const std::function<void(const EquivRel&)>& fn) {
    // Restricted growth strings in lexicographic order.
    std::vector<int> rgs(static_cast<std::size_t>(A.size), 0);
    while (true) {
        fn(EquivRel(A, rgs));
        int i = A.size - 1;
        while (i >= 1) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[static_cast<std::size_t>(i)] < cap) break;
            rgs[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 1) return;
        ++rgs[static_cast<std::size_t>(i)];
    }
}

std::vector<FinFn> enumerate_functions(const FinSet& A, const FinSet& B) {
    std::vector<FinFn> out;
    for_each_function(A, B, [&](const FinFn& f) { out.push_back(f); });
    return out;
}

std::vector<FinFn> enumerate_surjections(const FinSet& A, const FinSet& B) {
    std::vector<FinFn> out;
    for_each_surjection(A, B, [&](const FinFn& f) { out.push_back(f); });
    return out;
}

std::vector<EquivRel> enumerate_partitions(const FinSet& A) {
    std::vector<EquivRel> out;
    for_each_partition(A, [&](const EquivRel& r) { out.push_back(r); });
    return out;
}

std::uint64_t bell_number(int n) {
    require(n >= 0 && n <= 25, "bell_number: argument out of range");
    if (n == 0) return 1;
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

std::uint64_t stirling2(int n, int k) {
    require(n >= 0 && k >= 0 && n <= 25, "stirling2: argument out of range");
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<std::uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace symmset
