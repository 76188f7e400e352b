#include "thompson/tree.hpp"

#include <map>
#include <numeric>

namespace thompson {

namespace {

// Scans one subtree starting at `pos`; returns one past its end.
// Assumes the character set is already validated.
std::size_t skip_subtree(const std::string& s, std::size_t pos) {
    int pending = 1;
    while (pending > 0) {
        if (pos >= s.size()) throw domain_error("truncated tree shape");
        pending += s[pos] == '1' ? 1 : -1;
        ++pos;
    }
    return pos;
}

void validate_shape(const std::string& s) {
    if (s.empty()) throw domain_error("empty tree shape");
    long ones = 0, zeros = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c != '0' && c != '1') throw domain_error("tree shape must consist of 0s and 1s");
        c == '1' ? ++ones : ++zeros;
        if (zeros > ones && i + 1 != s.size())
            throw domain_error("tree shape violates the Dyck condition");
    }
    if (zeros != ones + 1) throw domain_error("tree shape violates the Dyck condition");
}

}  // namespace

Tree::Tree(std::string shape) : shape_(std::move(shape)) {
    validate_shape(shape_);
}

Tree Tree::left() const {
    if (is_leaf()) throw domain_error("leaf has no children");
    std::size_t end = skip_subtree(shape_, 1);
    return Tree(shape_.substr(1, end - 1), unchecked{});
}

Tree Tree::right() const {
    if (is_leaf()) throw domain_error("leaf has no children");
    std::size_t mid = skip_subtree(shape_, 1);
    return Tree(shape_.substr(mid), unchecked{});
}

std::vector<int> Tree::depths() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    int depth = 0;
    std::vector<int> stack;  // depths of pending right siblings
    for (char c : shape_) {
        if (c == '1') {
            stack.push_back(depth + 1);
            ++depth;
        } else {
            out.push_back(depth);
            if (!stack.empty()) {
                depth = stack.back();
                stack.pop_back();
            }
        }
    }
    return out;
}

Tree Tree::from_depths(const std::vector<int>& depths) {
    std::size_t pos = 0;
    // Recursive descent: a subtree at depth d is a leaf when the next
    // recorded depth equals d, otherwise a caret of two depth-(d+1) parts.
    auto rec = [&](auto&& self, int d) -> std::string {
        if (pos >= depths.size()) throw domain_error("depth list exhausted early");
        if (depths[pos] == d) {
            ++pos;
            return "0";
        }
        if (depths[pos] < d) throw domain_error("depth list is not a valid tree");
        std::string l = self(self, d + 1);
        std::string r = self(self, d + 1);
        return "1" + l + r;
    };
    std::string shape = rec(rec, 0);
    if (pos != depths.size()) throw domain_error("depth list has trailing entries");
    return Tree(shape);
}

std::vector<std::string> Tree::leaf_paths() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    std::string path;
    for (char c : shape_) {
        if (c == '1') {
            path.push_back('0');
        } else {
            out.push_back(path);
            while (!path.empty() && path.back() == '1') path.pop_back();
            if (!path.empty()) path.back() = '1';
        }
    }
    return out;
}

std::vector<Dyadic> Tree::leaf_cuts() const {
    std::vector<Dyadic> cuts;
    cuts.reserve(static_cast<std::size_t>(leaf_count()) + 1);
    Dyadic x(0);
    for (int d : depths()) {
        cuts.push_back(x);
        x = x + Dyadic::half_power(-d);
    }
    cuts.push_back(x);  // always exactly 1
    return cuts;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    if (trees_.empty()) throw domain_error("forest must have at least one root");
}

int Forest::leaves() const {
    int n = 0;
    for (const Tree& t : trees_) n += t.leaf_count();
    return n;
}

bool Forest::is_trivial() const {
    for (const Tree& t : trees_) {
        if (!t.is_leaf()) return false;
    }
    return true;
}

Tree compose(const Forest& f, const Tree& t) {
    if (f.roots() != t.leaf_count())
        throw domain_error("composition arity mismatch: forest has " +
                           std::to_string(f.roots()) + " roots, tree has " +
                           std::to_string(t.leaf_count()) + " leaves");
    std::string out;
    std::size_t next = 0;
    for (char c : t.shape()) {
        if (c == '1') {
            out.push_back('1');
        } else {
            out += f.trees()[next].shape();
            ++next;
        }
    }
    return Tree(out);
}

Forest compose(const Forest& f, const Forest& t) {
    if (f.roots() != t.leaves())
        throw domain_error("composition arity mismatch: forest has " +
                           std::to_string(f.roots()) + " roots, lower forest has " +
                           std::to_string(t.leaves()) + " leaves");
    std::vector<Tree> out;
    out.reserve(static_cast<std::size_t>(t.roots()));
    int offset = 0;
    for (const Tree& tr : t.trees()) {
        int n = tr.leaf_count();
        std::vector<Tree> slice(f.trees().begin() + offset, f.trees().begin() + offset + n);
        out.push_back(compose(Forest(std::move(slice)), tr));
        offset += n;
    }
    return Forest(std::move(out));
}

Tree graft_at(const Tree& t, int leaf_index, const Tree& sub) {
    std::vector<Tree> f(static_cast<std::size_t>(t.leaf_count()), Tree::leaf());
    f[static_cast<std::size_t>(leaf_index)] = sub;
    return compose(Forest(std::move(f)), t);
}

Tree tree_union(const Tree& a, const Tree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    return Tree::caret(tree_union(a.left(), b.left()), tree_union(a.right(), b.right()));
}

bool refines(const Tree& u, const Tree& a) {
    if (a.is_leaf()) return true;
    if (u.is_leaf()) return false;
    return refines(u.left(), a.left()) && refines(u.right(), a.right());
}

namespace {
void collect_refinement(const Tree& u, const Tree& a, std::vector<Tree>& out) {
    if (a.is_leaf()) {
        out.push_back(u);
        return;
    }
    if (u.is_leaf()) throw domain_error("tree does not refine the given base");
    collect_refinement(u.left(), a.left(), out);
    collect_refinement(u.right(), a.right(), out);
}
}  // namespace

Forest refinement_forest(const Tree& u, const Tree& a) {
    std::vector<Tree> out;
    collect_refinement(u, a, out);
    return Forest(std::move(out));
}

std::pair<Forest, Forest> common_multiple(const Tree& a, const Tree& b) {
    Tree m = tree_union(a, b);
    return {refinement_forest(m, a), refinement_forest(m, b)};
}

const std::vector<Tree>& trees_with_leaves(int n) {
    static std::map<int, std::vector<Tree>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw domain_error("tree must have at least one leaf");
    std::vector<Tree> out;
    if (n == 1) {
        out.push_back(Tree::leaf());
    } else {
        for (int k = 1; k < n; ++k) {
            for (const Tree& l : trees_with_leaves(k))
                for (const Tree& r : trees_with_leaves(n - k))
                    out.push_back(Tree::caret(l, r));
        }
        std::sort(out.begin(), out.end(),
                  [](const Tree& x, const Tree& y) { return x.shape() < y.shape(); });
    }
    return cache.emplace(n, std::move(out)).first->second;
}

Tree parse_tree(const std::string& text) {
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c != '0' && c != '1')
            throw parse_error(std::string("unexpected character '") + c + "' in tree", i);
        cleaned.push_back(c);
    }
    if (cleaned.empty()) throw parse_error("empty tree", 0);
    // Re-validate with positions for a friendlier message.
    long ones = 0, zeros = 0;
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
        cleaned[i] == '1' ? ++ones : ++zeros;
        if (zeros > ones && i + 1 != cleaned.size())
            throw parse_error("Dyck violation in tree shape", i);
    }
    if (zeros != ones + 1)
        throw parse_error("Dyck violation in tree shape", cleaned.size() - 1);
    return Tree(cleaned);
}

Forest parse_forest(const std::string& text) {
    std::vector<Tree> trees;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        trees.push_back(parse_tree(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Forest(std::move(trees));
}

}  // namespace thompson
