#include "thompson/wreath.hpp"

#include <algorithm>

namespace thompson {

WreathSpec::WreathSpec(std::vector<std::vector<int>> mult,
                       std::vector<std::pair<int, int>> split)
    : mult_(std::move(mult)), split_(std::move(split)) {
    const int n = static_cast<int>(mult_.size());
    if (n == 0) throw domain_error("empty multiplication table");
    if (static_cast<int>(split_.size()) != n)
        throw domain_error("split map size does not match group order");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != n) throw domain_error("ragged multiplication table");
        for (int v : row)
            if (v < 0 || v >= n) throw domain_error("multiplication table entry out of range");
    }
    for (int g = 0; g < n; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw domain_error("index 0 is not a two-sided unit");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw domain_error("multiplication table is not associative");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) inverse_[static_cast<std::size_t>(g)] = h;
        if (inverse_[static_cast<std::size_t>(g)] < 0)
            throw domain_error("group element without inverse");
    }
    for (auto [x, y] : split_)
        if (x < 0 || x >= n || y < 0 || y >= n) throw domain_error("split entry out of range");
    if (split_[0] != std::pair<int, int>{0, 0})
        throw domain_error("split must send the unit to (e, e)");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = mul(g, h);
            if (a(gh) != mul(a(g), a(h)) || b(gh) != mul(b(g), b(h)))
                throw domain_error("split is not a homomorphism into the direct square");
        }

    unsplit_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int g = n - 1; g >= 0; --g) unsplit_[static_cast<std::size_t>(a(g))][static_cast<std::size_t>(b(g))] = g;

    // Stable equality: grow from literal equality by one split level per
    // round until the relation stops changing.
    stable_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int g = 0; g < n; ++g) stable_[static_cast<std::size_t>(g)][static_cast<std::size_t>(g)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                if (stable_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]) continue;
                if (stable_[static_cast<std::size_t>(a(g))][static_cast<std::size_t>(a(h))] &&
                    stable_[static_cast<std::size_t>(b(g))][static_cast<std::size_t>(b(h))]) {
                    stable_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = 1;
                    changed = true;
                }
            }
    }
}

std::shared_ptr<const WreathSpec> WreathSpec::cyclic(int n, std::vector<std::pair<int, int>> split) {
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return std::make_shared<WreathSpec>(std::move(mult), std::move(split));
}

int WreathSpec::push(int g, const std::string& path) const {
    int cur = g;
    for (char c : path) cur = c == '0' ? a(cur) : b(cur);
    return cur;
}

namespace {

bool siblings(const std::vector<std::string>& paths, int i) {
    const std::string& x = paths[static_cast<std::size_t>(i)];
    const std::string& y = paths[static_cast<std::size_t>(i + 1)];
    return x.size() == y.size() && !x.empty() && x.back() == '0' && y.back() == '1' &&
           x.compare(0, x.size() - 1, y, 0, y.size() - 1) == 0;
}

Tree drop_caret(const Tree& t, int leaf) {
    std::vector<int> d = t.depths();
    d.erase(d.begin() + leaf + 1);
    d[static_cast<std::size_t>(leaf)] -= 1;
    return Tree::from_depths(d);
}

}  // namespace

LabelledElement::LabelledElement(std::shared_ptr<const WreathSpec> spec, Tree t,
                                 std::vector<int> labels_t, Tree s, std::vector<int> labels_s)
    : spec_(std::move(spec)), t_(std::move(t)), lt_(std::move(labels_t)), s_(std::move(s)),
      ls_(std::move(labels_s)) {
    if (!spec_) throw domain_error("missing wreath spec");
    if (t_.leaf_count() != s_.leaf_count())
        throw domain_error("labelled pair has mismatched leaf counts");
    if (static_cast<int>(lt_.size()) != t_.leaf_count() ||
        static_cast<int>(ls_.size()) != s_.leaf_count())
        throw domain_error("label sequence length does not match leaf count");
    auto in_range = [&](int v) { return v >= 0 && v < spec_->order(); };
    for (int v : lt_)
        if (!in_range(v)) throw domain_error("label out of range");
    for (int v : ls_)
        if (!in_range(v)) throw domain_error("label out of range");

    // Canonical representative: right-multiplying the labels of both trees
    // at leaf i by the same element leaves the fraction unchanged, so the
    // bottom labels can always be cleared to the unit.
    for (std::size_t i = 0; i < lt_.size(); ++i) {
        lt_[i] = spec_->mul(lt_[i], spec_->inv(ls_[i]));
        ls_[i] = 0;
    }

    // Reduce: a common caret cancels when the labelwise quotients lie in
    // the image of the split; the merged pair is relabelled (k, e).
    for (;;) {
        int n = s_.leaf_count();
        auto sp = s_.leaf_paths();
        auto tp = t_.leaf_paths();
        int found = -1, relabel = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (!siblings(sp, i) || !siblings(tp, i)) continue;
            int qx = spec_->mul(lt_[static_cast<std::size_t>(i)],
                                spec_->inv(ls_[static_cast<std::size_t>(i)]));
            int qy = spec_->mul(lt_[static_cast<std::size_t>(i) + 1],
                                spec_->inv(ls_[static_cast<std::size_t>(i) + 1]));
            int k = spec_->unsplit(qx, qy);
            if (k < 0) continue;
            found = i;
            relabel = k;
            break;
        }
        if (found < 0) break;
        t_ = drop_caret(t_, found);
        s_ = drop_caret(s_, found);
        lt_.erase(lt_.begin() + found + 1);
        ls_.erase(ls_.begin() + found + 1);
        lt_[static_cast<std::size_t>(found)] = relabel;
        ls_[static_cast<std::size_t>(found)] = 0;
    }
}

LabelledElement LabelledElement::identity(std::shared_ptr<const WreathSpec> spec) {
    return LabelledElement(std::move(spec), Tree::leaf(), {0}, Tree::leaf(), {0});
}

bool LabelledElement::is_identity() const {
    if (!(t_ == s_)) return false;
    for (std::size_t i = 0; i < lt_.size(); ++i)
        if (!spec_->stably_equal(lt_[i], ls_[i])) return false;
    return true;
}

LabelledTree compose_labelled(const WreathSpec& spec, const Forest& f,
                              const std::vector<int>& f_labels, const Tree& t,
                              const std::vector<int>& t_labels) {
    if (f.roots() != t.leaf_count()) throw domain_error("labelled composition arity mismatch");
    if (static_cast<int>(f_labels.size()) != f.leaves() ||
        static_cast<int>(t_labels.size()) != t.leaf_count())
        throw domain_error("label sequence length mismatch");
    Tree composed = compose(f, t);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(f.leaves()));
    int global = 0;
    for (int i = 0; i < f.roots(); ++i) {
        const Tree& fi = f.trees()[static_cast<std::size_t>(i)];
        for (const std::string& path : fi.leaf_paths()) {
            int pushed = spec.push(t_labels[static_cast<std::size_t>(i)], path);
            labels.push_back(spec.mul(pushed, f_labels[static_cast<std::size_t>(global)]));
            ++global;
        }
    }
    return {composed, labels};
}

LabelledElement wreath_multiply(const LabelledElement& a, const LabelledElement& b) {
    if (a.spec() != b.spec()) throw domain_error("mismatched wreath specs");
    const WreathSpec& spec = *a.spec();
    auto [p, q] = common_multiple(a.bottom(), b.top());

    std::vector<int> p_labels(static_cast<std::size_t>(p.leaves()), 0);

    // Middle labels from the a-side (with trivial forest labels) pin the
    // q-side labels so the common refinement coincides on both routes.
    std::vector<int> q_labels;
    q_labels.reserve(static_cast<std::size_t>(q.leaves()));
    {
        // Walk both refinements leaf by leaf; they have the same shape.
        std::vector<int> mid_a;
        int global = 0;
        for (int i = 0; i < p.roots(); ++i)
            for (const std::string& path : p.trees()[static_cast<std::size_t>(i)].leaf_paths()) {
                mid_a.push_back(spec.push(a.bottom_labels()[static_cast<std::size_t>(i)], path));
                ++global;
            }
        global = 0;
        for (int j = 0; j < q.roots(); ++j)
            for (const std::string& path : q.trees()[static_cast<std::size_t>(j)].leaf_paths()) {
                int pushed = spec.push(b.top_labels()[static_cast<std::size_t>(j)], path);
                q_labels.push_back(spec.mul(spec.inv(pushed), mid_a[static_cast<std::size_t>(global)]));
                ++global;
            }
    }

    LabelledTree num = compose_labelled(spec, p, p_labels, a.top(), a.top_labels());
    LabelledTree den = compose_labelled(spec, q, q_labels, b.bottom(), b.bottom_labels());
    return LabelledElement(a.spec(), num.tree, num.labels, den.tree, den.labels);
}

LabelledElement wreath_invert(const LabelledElement& a) {
    return LabelledElement(a.spec(), a.bottom(), a.bottom_labels(), a.top(), a.top_labels());
}

bool wreath_equal(const LabelledElement& a, const LabelledElement& b) {
    return wreath_multiply(a, wreath_invert(b)).is_identity();
}

}  // namespace thompson
