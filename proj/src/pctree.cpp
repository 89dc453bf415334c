#include "sp/pctree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sp {

// ---------------------------------------------------------------- helpers

std::vector<int> canonical_circular(const std::vector<int>& order) {
    int n = static_cast<int>(order.size());
    if (n == 0) return order;
    std::vector<int> best, cand(n);
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < n; ++s) {
            for (int i = 0; i < n; ++i) cand[i] = dir == 0 ? order[(s + i) % n] : order[((s - i) % n + n) % n];
            if (best.empty() || cand < best) best = cand;
        }
    return best;
}

bool is_circular_arc(const std::vector<int>& order, const std::vector<int>& set) {
    std::set<int> in(set.begin(), set.end());
    int n = static_cast<int>(order.size());
    int changes = 0;
    for (int i = 0; i < n; ++i)
        if (in.count(order[i]) != in.count(order[(i + 1) % n])) ++changes;
    return changes <= 2;
}

// ---------------------------------------------------------------- construction

PCTree::PCTree(int num_columns) {
    std::vector<int> cols(num_columns);
    std::iota(cols.begin(), cols.end(), 0);
    reset_star(cols);
}

PCTree::PCTree(const std::vector<int>& columns) { reset_star(columns); }

void PCTree::reset_star(const std::vector<int>& columns) {
    int maxc = columns.empty() ? -1 : *std::max_element(columns.begin(), columns.end());
    nodes_.clear();
    leaf_node_.assign(std::max<int>(maxc + 1, static_cast<int>(leaf_node_.size())), -1);
    std::fill(leaf_node_.begin(), leaf_node_.end(), -1);
    if (columns.empty()) return;
    int center = new_node(NodeType::P);
    for (int c : columns) {
        int l = new_node(NodeType::Leaf, c);
        leaf_node_[c] = l;
        nodes_[l].adj.push_back(center);
        nodes_[center].adj.push_back(l);
    }
}

int PCTree::new_node(NodeType t, int column) {
    Node n;
    n.type = t;
    n.column = column;
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
}

void PCTree::replace_neighbor(int x, int old_nb, int new_nb) {
    for (int& y : nodes_[x].adj)
        if (y == old_nb) {
            y = new_nb;
            return;
        }
}

void PCTree::remove_neighbor(int x, int nb) {
    auto& a = nodes_[x].adj;
    a.erase(std::find(a.begin(), a.end(), nb));
}

std::vector<int> PCTree::leaves() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(leaf_node_.size()); ++c)
        if (leaf_node_[c] >= 0) out.push_back(c);
    return out;
}

int PCTree::num_leaves() const {
    return static_cast<int>(std::count_if(leaf_node_.begin(), leaf_node_.end(), [](int x) { return x >= 0; }));
}

bool PCTree::has_leaf(int column) const {
    return column >= 0 && column < static_cast<int>(leaf_node_.size()) && leaf_node_[column] >= 0;
}

int PCTree::any_internal() const {
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].alive && nodes_[i].type != NodeType::Leaf) return i;
    return -1;
}

int PCTree::num_nodes() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.alive; }));
}

int PCTree::count_type(NodeType t) const {
    return static_cast<int>(
        std::count_if(nodes_.begin(), nodes_.end(), [t](const Node& n) { return n.alive && n.type == t; }));
}

// ---------------------------------------------------------------- row update

bool PCTree::apply_row(const std::vector<int>& zeros, const std::vector<int>& ones) {
    std::vector<int> color(leaf_node_.size(), -1);
    for (int c : zeros) {
        if (!has_leaf(c) || color[c] >= 0) throw Error(ErrorKind::PreconditionViolated, "bad zero column");
        color[c] = 0;
    }
    for (int c : ones) {
        if (!has_leaf(c) || color[c] >= 0) throw Error(ErrorKind::PreconditionViolated, "bad one column");
        color[c] = 1;
    }
    int total = num_leaves();
    if (static_cast<int>(zeros.size() + ones.size()) != total)
        throw Error(ErrorKind::PreconditionViolated, "row must cover every leaf of the tree");
    if (zeros.size() <= 1 || ones.size() <= 1 || total <= 3) return true;

    const int N = static_cast<int>(nodes_.size());
    const int B = static_cast<int>(ones.size()), W = static_cast<int>(zeros.size());
    int root = any_internal();
    std::vector<int> parent(N, -1), order;
    order.reserve(N);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : nodes_[x].adj)
            if (parent[y] < 0) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<int> nb(N, 0), nw(N, 0);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        int x = order[i];
        if (nodes_[x].type == NodeType::Leaf) {
            if (color[nodes_[x].column] == 1) nb[x] = 1;
            else nw[x] = 1;
        }
        if (x != root) {
            nb[parent[x]] += nb[x];
            nw[parent[x]] += nw[x];
        }
    }
    // colours present on y's side of edge x-y: bit 0 white, bit 1 black
    auto side = [&](int x, int y) {
        int b, w;
        if (parent[y] == x && y != root) {
            b = nb[y];
            w = nw[y];
        } else {
            b = B - nb[x];
            w = W - nw[x];
        }
        return (w > 0 ? 1 : 0) | (b > 0 ? 2 : 0);
    };
    std::vector<int> mdeg(N, 0);
    std::vector<std::pair<int, int>> mixed;
    for (int y : order) {
        if (y == root) continue;
        int b = nb[y], w = nw[y];
        if ((b == B && w == 0) || (b == 0 && w == W)) return true;  // already a split of the tree
        if (b > 0 && w > 0 && B - b > 0 && W - w > 0) {
            mixed.push_back({y, parent[y]});
            if (++mdeg[y] > 2 || ++mdeg[parent[y]] > 2) return false;
        }
    }

    if (mixed.empty()) {
        int t = -1;
        for (int x : order) {
            if (nodes_[x].type == NodeType::Leaf) continue;
            bool mono = true;
            for (int y : nodes_[x].adj) mono = mono && side(x, y) != 3;
            if (mono) {
                t = x;
                break;
            }
        }
        if (t < 0) throw Error(ErrorKind::InternalContradiction, "no terminal node");
        Node& nt = nodes_[t];
        if (nt.type == NodeType::C) {
            int d = static_cast<int>(nt.adj.size()), changes = 0;
            for (int i = 0; i < d; ++i)
                if (side(t, nt.adj[i]) != side(t, nt.adj[(i + 1) % d])) ++changes;
            return changes <= 2;
        }
        std::vector<int> blacks, whites;
        for (int y : nt.adj) (side(t, y) == 2 ? blacks : whites).push_back(y);
        int pw = new_node(NodeType::P);
        nodes_[t].adj = blacks;
        nodes_[t].adj.push_back(pw);
        nodes_[pw].adj = whites;
        nodes_[pw].adj.push_back(t);
        for (int y : whites) replace_neighbor(y, t, pw);
        return true;
    }

    // order the terminal path
    std::vector<std::vector<int>> madj(N);
    for (auto [a, b] : mixed) {
        madj[a].push_back(b);
        madj[b].push_back(a);
    }
    int start = -1;
    for (auto [a, b] : mixed) {
        if (mdeg[a] == 1) start = a;
        if (mdeg[b] == 1) start = b;
    }
    if (start < 0) return false;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (true) {
        int nxt = -1;
        for (int y : madj[cur])
            if (y != prev) nxt = y;
        if (nxt < 0) break;
        path.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (path.size() != mixed.size() + 1) return false;
    int k = static_cast<int>(path.size());

    // per path node: black and white neighbour sequences, in forward direction
    std::vector<std::vector<int>> bseq(k), wseq(k);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pgroups(k);  // P-node groups to materialise
    for (int i = 0; i < k; ++i) {
        int x = path[i];
        int pv = i > 0 ? path[i - 1] : -1, nx = i + 1 < k ? path[i + 1] : -1;
        const auto& adj = nodes_[x].adj;
        int d = static_cast<int>(adj.size());
        if (nodes_[x].type == NodeType::P) {
            std::vector<int> bl, wh;
            for (int y : adj) {
                if (y == pv || y == nx) continue;
                int s = side(x, y);
                if (s == 3) return false;
                (s == 2 ? bl : wh).push_back(y);
            }
            pgroups[i] = {bl, wh};
            continue;
        }
        auto colour_seq = [&](const std::vector<int>& seq, int& col) {
            col = 0;
            for (int y : seq) {
                int s = side(x, y);
                if (s == 3) return false;
                if (col == 0) col = s;
                else if (col != s) return false;
            }
            return true;
        };
        if (pv >= 0 && nx >= 0) {
            int ip = static_cast<int>(std::find(adj.begin(), adj.end(), pv) - adj.begin());
            int in = static_cast<int>(std::find(adj.begin(), adj.end(), nx) - adj.begin());
            std::vector<int> A, Bv;
            for (int j = (ip + 1) % d; j != in; j = (j + 1) % d) A.push_back(adj[j]);
            for (int j = (in + 1) % d; j != ip; j = (j + 1) % d) Bv.push_back(adj[j]);
            int ca, cb;
            if (!colour_seq(A, ca) || !colour_seq(Bv, cb)) return false;
            if (ca != 0 && cb != 0 && ca == cb) return false;
            bool a_black = ca == 2 || (ca == 0 && cb == 1);
            if (a_black) {
                bseq[i] = A;
                wseq[i] = Bv;
            } else {
                bseq[i] = std::vector<int>(Bv.rbegin(), Bv.rend());
                wseq[i] = std::vector<int>(A.rbegin(), A.rend());
            }
        } else {
            int other = pv >= 0 ? pv : nx;
            int io = static_cast<int>(std::find(adj.begin(), adj.end(), other) - adj.begin());
            std::vector<int> X;
            for (int j = (io + 1) % d; j != io; j = (j + 1) % d) X.push_back(adj[j]);
            std::vector<int> cols;
            for (int y : X) {
                int s = side(x, y);
                if (s == 3) return false;
                cols.push_back(s);
            }
            int changes = 0;
            for (size_t j = 0; j + 1 < cols.size(); ++j)
                if (cols[j] != cols[j + 1]) ++changes;
            if (changes > 1) return false;
            // first endpoint wants white then black, last endpoint black then white
            int want_first = (i == 0) ? 1 : 2;
            if (!cols.empty() && cols.front() != want_first) {
                std::reverse(X.begin(), X.end());
                std::reverse(cols.begin(), cols.end());
            }
            for (size_t j = 0; j < X.size(); ++j) (cols[j] == 2 ? bseq[i] : wseq[i]).push_back(X[j]);
        }
    }

    // commit
    int z = new_node(NodeType::C);
    auto group_node = [&](const std::vector<int>& members, int old) -> std::vector<int> {
        if (members.empty()) return {};
        if (members.size() == 1) return {members[0]};
        int p = new_node(NodeType::P);
        nodes_[p].adj.push_back(z);
        for (int y : members) {
            nodes_[p].adj.push_back(y);
            replace_neighbor(y, old, p);
        }
        return {p};
    };
    for (int i = 0; i < k; ++i) {
        if (nodes_[path[i]].type == NodeType::P) {
            bseq[i] = group_node(pgroups[i].first, path[i]);
            wseq[i] = group_node(pgroups[i].second, path[i]);
        }
    }
    std::vector<int> cyc;
    for (int i = 0; i < k; ++i) cyc.insert(cyc.end(), bseq[i].begin(), bseq[i].end());
    for (int i = k - 1; i >= 0; --i) cyc.insert(cyc.end(), wseq[i].begin(), wseq[i].end());
    std::set<int> on_path(path.begin(), path.end());
    for (int y : cyc) {
        for (int& w : nodes_[y].adj)
            if (on_path.count(w)) w = z;
    }
    nodes_[z].adj = cyc;
    for (int x : path) {
        nodes_[x].alive = false;
        nodes_[x].adj.clear();
    }
    return true;
}

// ---------------------------------------------------------------- deletion

void PCTree::delete_leaves(const std::vector<int>& columns) {
    for (int c : columns) {
        if (!has_leaf(c)) continue;
        int l = leaf_node_[c];
        leaf_node_[c] = -1;
        nodes_[l].alive = false;
        if (nodes_[l].adj.empty()) continue;
        int x = nodes_[l].adj[0];
        nodes_[l].adj.clear();
        remove_neighbor(x, l);
        if (nodes_[x].type != NodeType::Leaf && nodes_[x].adj.size() == 2) {
            int a = nodes_[x].adj[0], b = nodes_[x].adj[1];
            replace_neighbor(a, x, b);
            replace_neighbor(b, x, a);
            nodes_[x].alive = false;
            nodes_[x].adj.clear();
        }
    }
    if (num_leaves() <= 3) reset_star(leaves());
}

// ---------------------------------------------------------------- orders

void PCTree::emit(int x, int parent, std::vector<int>& out) const {
    const Node& n = nodes_[x];
    if (n.type == NodeType::Leaf) {
        out.push_back(n.column);
        if (parent >= 0) return;
    }
    int d = static_cast<int>(n.adj.size());
    int ip = parent >= 0 ? static_cast<int>(std::find(n.adj.begin(), n.adj.end(), parent) - n.adj.begin()) : -1;
    for (int j = 1; j <= d; ++j) {
        int y = n.adj[((ip < 0 ? 0 : ip) + j) % d];
        if (y == parent) continue;
        emit(y, x, out);
    }
}

std::vector<int> PCTree::some_order() const {
    std::vector<int> out;
    auto ls = leaves();
    if (ls.empty()) return out;
    int l0 = leaf_node_[ls[0]];
    out.push_back(ls[0]);
    if (!nodes_[l0].adj.empty()) emit(nodes_[l0].adj[0], l0, out);
    return out;
}

void PCTree::collect_leaves(int x, int parent, std::vector<int>& out) const {
    const Node& n = nodes_[x];
    if (n.type == NodeType::Leaf) {
        out.push_back(n.column);
        if (parent >= 0) return;
    }
    for (int y : n.adj)
        if (y != parent) collect_leaves(y, x, out);
}

std::vector<std::vector<int>> PCTree::allowed_orders(int bound) const {
    int L = num_leaves();
    if (L > bound) throw Error(ErrorKind::TooManyLeaves, std::to_string(L) + " > " + std::to_string(bound));
    std::set<std::vector<int>> result;
    auto ls = leaves();
    if (L <= 3) {
        if (L > 0) result.insert(canonical_circular(ls));
        return {result.begin(), result.end()};
    }
    std::function<std::vector<std::vector<int>>(int, int)> gen = [&](int x, int parent) {
        const Node& n = nodes_[x];
        if (n.type == NodeType::Leaf) return std::vector<std::vector<int>>{{n.column}};
        std::vector<int> children;
        int d = static_cast<int>(n.adj.size());
        int ip = static_cast<int>(std::find(n.adj.begin(), n.adj.end(), parent) - n.adj.begin());
        for (int j = 1; j < d; ++j) children.push_back(n.adj[(ip + j) % d]);
        std::vector<std::vector<int>> child_orders;
        std::vector<std::vector<std::vector<int>>> sub;
        for (int c : children) sub.push_back(gen(c, x));
        std::vector<std::vector<int>> perms;
        std::vector<int> idx(children.size());
        std::iota(idx.begin(), idx.end(), 0);
        if (n.type == NodeType::P) {
            do perms.push_back(idx);
            while (std::next_permutation(idx.begin(), idx.end()));
        } else {
            perms.push_back(idx);
            std::vector<int> r(idx.rbegin(), idx.rend());
            if (r != idx) perms.push_back(r);
        }
        std::vector<std::vector<int>> out;
        for (const auto& p : perms) {
            std::vector<std::vector<int>> acc{{}};
            for (int ci : p) {
                std::vector<std::vector<int>> next;
                for (const auto& a : acc)
                    for (const auto& s : sub[ci]) {
                        auto t = a;
                        t.insert(t.end(), s.begin(), s.end());
                        next.push_back(std::move(t));
                    }
                acc = std::move(next);
            }
            out.insert(out.end(), acc.begin(), acc.end());
        }
        return out;
    };
    int l0 = leaf_node_[ls[0]];
    for (auto s : gen(nodes_[l0].adj[0], l0)) {
        s.insert(s.begin(), ls[0]);
        result.insert(canonical_circular(s));
    }
    return {result.begin(), result.end()};
}

std::optional<std::vector<int>> PCTree::extend_order(const std::vector<int>& partial) const {
    auto ls = leaves();
    if (partial.empty()) return some_order();
    for (int c : partial)
        if (!has_leaf(c)) return std::nullopt;
    if (ls.size() <= 3) {
        std::vector<int> out = partial;
        for (int c : ls)
            if (std::find(partial.begin(), partial.end(), c) == partial.end()) out.push_back(c);
        return out;
    }
    std::vector<int> pos(leaf_node_.size(), -1);
    for (int i = 0; i < static_cast<int>(partial.size()); ++i) pos[partial[i]] = i;
    int root = leaf_node_[partial[0]];
    const int N = static_cast<int>(nodes_.size());
    std::vector<int> lo(N, 1 << 30), hi(N, -1), cnt(N, 0);
    std::function<void(int, int)> stats = [&](int x, int parent) {
        const Node& n = nodes_[x];
        if (n.type == NodeType::Leaf && parent >= 0) {
            if (pos[n.column] >= 0) {
                lo[x] = hi[x] = pos[n.column];
                cnt[x] = 1;
            }
            return;
        }
        for (int y : n.adj) {
            if (y == parent) continue;
            stats(y, x);
            lo[x] = std::min(lo[x], lo[y]);
            hi[x] = std::max(hi[x], hi[y]);
            cnt[x] += cnt[y];
        }
    };
    int top = nodes_[root].adj[0];
    stats(top, root);
    bool ok = true;
    std::vector<int> out{partial[0]};
    std::function<void(int, int)> walk = [&](int x, int parent) {
        if (!ok) return;
        const Node& n = nodes_[x];
        if (n.type == NodeType::Leaf) {
            out.push_back(n.column);
            return;
        }
        if (cnt[x] > 0 && hi[x] - lo[x] + 1 != cnt[x]) {
            ok = false;
            return;
        }
        int d = static_cast<int>(n.adj.size());
        int ip = static_cast<int>(std::find(n.adj.begin(), n.adj.end(), parent) - n.adj.begin());
        std::vector<int> children;
        for (int j = 1; j < d; ++j) children.push_back(n.adj[(ip + j) % d]);
        if (n.type == NodeType::P) {
            std::stable_sort(children.begin(), children.end(), [&](int a, int b) {
                bool sa = cnt[a] > 0, sb = cnt[b] > 0;
                if (sa != sb) return sa;
                return sa && lo[a] < lo[b];
            });
        } else {
            std::vector<int> with;
            for (int c : children)
                if (cnt[c] > 0) with.push_back(c);
            bool inc = true, dec = true;
            for (size_t j = 0; j + 1 < with.size(); ++j) {
                inc = inc && lo[with[j]] < lo[with[j + 1]];
                dec = dec && lo[with[j]] > lo[with[j + 1]];
            }
            if (!inc && !dec) {
                ok = false;
                return;
            }
            if (!inc) std::reverse(children.begin(), children.end());
        }
        for (int c : children) walk(c, x);
    };
    walk(top, root);
    if (!ok) return std::nullopt;
    std::vector<int> restricted;
    for (int c : out)
        if (pos[c] >= 0) restricted.push_back(c);
    if (canonical_circular(restricted) != canonical_circular(partial)) return std::nullopt;
    return out;
}

std::vector<std::vector<int>> PCTree::extract_constraints() const {
    std::set<std::vector<int>> found;
    int L = num_leaves();
    auto add = [&](std::vector<int> s) {
        if (static_cast<int>(s.size()) <= 1 || static_cast<int>(s.size()) >= L - 1) return;
        std::sort(s.begin(), s.end());
        found.insert(s);
    };
    for (int x = 0; x < static_cast<int>(nodes_.size()); ++x) {
        const Node& n = nodes_[x];
        if (!n.alive || n.type == NodeType::Leaf) continue;
        std::vector<std::vector<int>> sides;
        for (int y : n.adj) {
            std::vector<int> s;
            collect_leaves(y, x, s);
            add(s);
            sides.push_back(s);
        }
        if (n.type == NodeType::C) {
            int d = static_cast<int>(sides.size());
            for (int st = 0; st < d; ++st)
                for (int len = 2; len <= d - 2; ++len) {
                    std::vector<int> u;
                    for (int j = 0; j < len; ++j) {
                        const auto& s = sides[(st + j) % d];
                        u.insert(u.end(), s.begin(), s.end());
                    }
                    add(u);
                }
        }
    }
    return {found.begin(), found.end()};
}

std::string PCTree::to_string() const {
    std::ostringstream os;
    for (int x = 0; x < static_cast<int>(nodes_.size()); ++x) {
        const Node& n = nodes_[x];
        if (!n.alive) continue;
        os << x << (n.type == NodeType::Leaf ? "L" : n.type == NodeType::P ? "P" : "C");
        if (n.type == NodeType::Leaf) os << "(" << n.column << ")";
        os << ":";
        for (int y : n.adj) os << " " << y;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- matrices

CircularResult test_circular_ones(const BinaryMatrix& m, int num_columns) {
    PCTree t(num_columns);
    CircularResult res;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        std::vector<int> z, o;
        for (int c = 0; c < num_columns; ++c) (m[i][c] ? o : z).push_back(c);
        if (!t.apply_row(z, o)) {
            res.failing_row = i;
            return res;
        }
    }
    res.feasible = true;
    res.order = t.some_order();
    return res;
}

AmbiguousMatrix AmbiguousMatrix::parse(const std::vector<std::string>& lines) {
    AmbiguousMatrix m;
    for (const auto& line : lines) {
        std::vector<int> row;
        for (char ch : line) {
            if (ch == '0') row.push_back(0);
            else if (ch == '1') row.push_back(1);
            else if (ch == '*') row.push_back(kStar);
            else if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            else throw Error(ErrorKind::InvalidInput, std::string("bad matrix symbol '") + ch + "'");
        }
        if (row.empty()) continue;
        if (m.rows.empty()) m.num_columns = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != m.num_columns) throw Error(ErrorKind::InvalidInput, "ragged matrix");
        m.rows.push_back(row);
    }
    return m;
}

bool AmbiguousMatrix::stair_property() const {
    for (int c = 0; c < num_columns; ++c) {
        bool star = false;
        for (const auto& r : rows) {
            if (r[c] == kStar) star = true;
            else if (star) return false;
        }
    }
    return true;
}

void AmbiguousMatrix::stair_closure() {
    for (int c = 0; c < num_columns; ++c) {
        bool star = false;
        for (auto& r : rows) {
            if (r[c] == kStar) star = true;
            else if (star) r[c] = kStar;
        }
    }
}

std::string AmbiguousMatrix::row_string(int i) const {
    std::string s;
    for (int v : rows[i]) s += v == kStar ? '*' : static_cast<char>('0' + v);
    return s;
}

bool order_satisfies(const AmbiguousMatrix& m, const std::vector<int>& order) {
    for (const auto& r : m.rows) {
        std::vector<int> sub, ones;
        for (int c : order)
            if (r[c] != AmbiguousMatrix::kStar) {
                sub.push_back(c);
                if (r[c] == 1) ones.push_back(c);
            }
        if (!is_circular_arc(sub, ones)) return false;
    }
    return true;
}

bool order_satisfies(const BinaryMatrix& m, const std::vector<int>& order) {
    for (const auto& r : m) {
        std::vector<int> ones;
        for (int c : order)
            if (r[c] == 1) ones.push_back(c);
        if (!is_circular_arc(order, ones)) return false;
    }
    return true;
}

CircularResult test_ambiguous(const AmbiguousMatrix& m) {
    if (!m.stair_property()) throw Error(ErrorKind::StairViolation, "an ambiguous entry has a 0/1 entry below it");
    CircularResult res;
    int n = m.num_columns;
    PCTree t(n);
    std::vector<PCTree> snapshots;
    std::vector<char> alive(n, 1);
    std::vector<int> never;  // columns ambiguous from the first row on
    for (int i = 0; i < static_cast<int>(m.rows.size()); ++i) {
        const auto& r = m.rows[i];
        std::vector<int> gone;
        for (int c = 0; c < n; ++c)
            if (alive[c] && r[c] == AmbiguousMatrix::kStar) {
                gone.push_back(c);
                alive[c] = 0;
            }
        if (!gone.empty()) {
            if (i == 0) never = gone;
            else snapshots.push_back(t);
            t.delete_leaves(gone);
        }
        std::vector<int> z, o;
        for (int c = 0; c < n; ++c)
            if (alive[c]) (r[c] == 1 ? o : z).push_back(c);
        if (z.empty() && o.empty()) continue;
        if (!t.apply_row(z, o)) {
            res.failing_row = i;
            return res;
        }
    }
    std::vector<int> order = t.some_order();
    for (int s = static_cast<int>(snapshots.size()) - 1; s >= 0; --s) {
        auto ext = snapshots[s].extend_order(order);
        if (!ext) throw Error(ErrorKind::InternalContradiction, "order extension failed");
        order = *ext;
    }
    order.insert(order.end(), never.begin(), never.end());
    if (!order_satisfies(m, order)) throw Error(ErrorKind::InternalContradiction, "assembled order violates a row");
    res.feasible = true;
    res.order = order;
    return res;
}

// ---------------------------------------------------------------- Tucker obstructions

BinaryMatrix tucker_m1(int num_columns) {
    BinaryMatrix m;
    int k = num_columns - 1;  // cycle length
    for (int j = 0; j + 1 < k; ++j) {
        std::vector<int> r(num_columns, 0);
        r[j] = r[j + 1] = 1;
        m.push_back(r);
    }
    std::vector<int> r(num_columns, 0);
    r[0] = r[k - 1] = 1;
    m.push_back(r);
    return m;
}

BinaryMatrix tucker_m2() {
    return {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}};
}

const char* tucker_type_name(TuckerType t) {
    switch (t) {
        case TuckerType::None: return "none";
        case TuckerType::M1: return "M1";
        case TuckerType::M2: return "M2";
        case TuckerType::Other: return "other";
    }
    return "?";
}

namespace {

BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    BinaryMatrix s;
    for (int r : rows) {
        std::vector<int> row;
        for (int c : cols) row.push_back(m[r][c]);
        s.push_back(row);
    }
    return s;
}

bool circular(const BinaryMatrix& m, int cols) { return test_circular_ones(m, cols).feasible; }

bool matches_m1(const BinaryMatrix& s) {
    int R = static_cast<int>(s.size()), C = static_cast<int>(s[0].size());
    if (R != C - 1 || R < 3) return false;
    int zero_cols = 0, zc = -1;
    for (int c = 0; c < C; ++c) {
        bool z = true;
        for (int r = 0; r < R; ++r) z = z && s[r][c] == 0;
        if (z) {
            ++zero_cols;
            zc = c;
        }
    }
    if (zero_cols != 1) return false;
    std::vector<std::vector<int>> adj(C);
    for (int r = 0; r < R; ++r) {
        std::vector<int> ones;
        for (int c = 0; c < C; ++c)
            if (s[r][c]) ones.push_back(c);
        if (ones.size() != 2) return false;
        adj[ones[0]].push_back(ones[1]);
        adj[ones[1]].push_back(ones[0]);
    }
    int start = zc == 0 ? 1 : 0;
    for (int c = 0; c < C; ++c)
        if (c != zc && adj[c].size() != 2) return false;
    std::set<int> seen;
    std::vector<int> st{start};
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        if (!seen.insert(x).second) continue;
        for (int y : adj[x]) st.push_back(y);
    }
    return static_cast<int>(seen.size()) == C - 1;
}

bool matches_m2(const BinaryMatrix& s) {
    if (s.size() != 4 || s[0].size() != 6) return false;
    std::vector<std::vector<int>> pairs, triples;
    for (const auto& r : s) {
        std::vector<int> ones;
        for (int c = 0; c < 6; ++c)
            if (r[c]) ones.push_back(c);
        if (ones.size() == 2) pairs.push_back(ones);
        else if (ones.size() == 3) triples.push_back(ones);
        else return false;
    }
    if (pairs.size() != 3 || triples.size() != 1) return false;
    std::set<int> cover;
    for (const auto& p : pairs) cover.insert(p.begin(), p.end());
    if (cover.size() != 6) return false;
    for (const auto& p : pairs) {
        int hit = 0;
        for (int c : triples[0]) hit += (c == p[0] || c == p[1]) ? 1 : 0;
        if (hit != 1) return false;
    }
    return true;
}

}  // namespace

TuckerObstruction tucker_scan(const BinaryMatrix& m, int num_columns) {
    TuckerObstruction ob;
    if (circular(m, num_columns)) return ob;
    std::vector<int> rows(m.size()), cols(num_columns);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    for (size_t i = 0; i < rows.size();) {
        std::vector<int> trial = rows;
        trial.erase(trial.begin() + i);
        if (!trial.empty() && !circular(submatrix(m, trial, cols), static_cast<int>(cols.size()))) rows = trial;
        else ++i;
    }
    for (size_t i = 0; i < cols.size();) {
        std::vector<int> trial = cols;
        trial.erase(trial.begin() + i);
        if (!trial.empty() && !circular(submatrix(m, rows, trial), static_cast<int>(trial.size()))) cols = trial;
        else ++i;
    }
    ob.rows = rows;
    ob.columns = cols;
    ob.type = TuckerType::Other;
    BinaryMatrix s = submatrix(m, rows, cols);
    int R = static_cast<int>(rows.size());
    if (R <= 16) {
        for (long mask = 0; mask < (1L << R); ++mask) {
            BinaryMatrix t = s;
            for (int r = 0; r < R; ++r)
                if (mask >> r & 1)
                    for (int& x : t[r]) x ^= 1;
            if (matches_m2(t)) {
                ob.type = TuckerType::M2;
                return ob;
            }
            if (matches_m1(t)) {
                ob.type = TuckerType::M1;
                return ob;
            }
        }
    }
    return ob;
}

// ---------------------------------------------------------------- brute force references

bool brute_force_consecutive_ones(const BinaryMatrix& m, int num_columns) {
    std::vector<int> perm(num_columns);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& r : m) {
            int first = -1, last = -1, cnt = 0;
            for (int i = 0; i < num_columns; ++i)
                if (r[perm[i]]) {
                    if (first < 0) first = i;
                    last = i;
                    ++cnt;
                }
            if (cnt > 0 && last - first + 1 != cnt) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::optional<std::vector<int>> brute_force_circular_ones(const BinaryMatrix& m, int num_columns) {
    if (num_columns == 0) return std::vector<int>{};
    std::vector<int> perm(num_columns);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (order_satisfies(m, perm)) return perm;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return std::nullopt;
}

std::optional<std::vector<int>> brute_force_ambiguous(const AmbiguousMatrix& m) {
    int n = m.num_columns;
    if (n == 0) return std::vector<int>{};
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (order_satisfies(m, perm)) return perm;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return std::nullopt;
}

}  // namespace sp
