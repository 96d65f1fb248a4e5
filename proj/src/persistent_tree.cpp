#include "lcsk/persistent_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace lcsk::pstree {

NodeId Forest::make(NodeId left, int key, std::int32_t payload, NodeId right) {
    if (nodes_.size() >= static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw std::length_error("persistent tree arena exhausted");
    }
    const auto h = static_cast<std::int8_t>(std::max(height_of(left), height_of(right)) + 1);
    nodes_.push_back({key, payload, left, right, size_of(left) + size_of(right) + 1, h});
    return static_cast<NodeId>(nodes_.size() - 1);
}

// Builds (left, key, right) restoring AVL balance with at most one single or
// double rotation; valid when the child heights differ by at most 2.
NodeId Forest::make_balanced(NodeId left, int key, std::int32_t payload, NodeId right) {
    const int hl = height_of(left);
    const int hr = height_of(right);
    if (hl > hr + 1) {
        const Node l = nodes_[left];
        if (height_of(l.left) >= height_of(l.right)) {
            const NodeId new_right = make(l.right, key, payload, right);
            return make(l.left, l.key, l.payload, new_right);
        }
        const Node lr = nodes_[l.right];
        const NodeId new_left = make(l.left, l.key, l.payload, lr.left);
        const NodeId new_right = make(lr.right, key, payload, right);
        return make(new_left, lr.key, lr.payload, new_right);
    }
    if (hr > hl + 1) {
        const Node r = nodes_[right];
        if (height_of(r.right) >= height_of(r.left)) {
            const NodeId new_left = make(left, key, payload, r.left);
            return make(new_left, r.key, r.payload, r.right);
        }
        const Node rl = nodes_[r.left];
        const NodeId new_left = make(left, key, payload, rl.left);
        const NodeId new_right = make(rl.right, r.key, r.payload, r.right);
        return make(new_left, rl.key, rl.payload, new_right);
    }
    return make(left, key, payload, right);
}

NodeId Forest::insert_rec(NodeId t, int key, std::int32_t payload) {
    if (t == kNil) {
        return make(kNil, key, payload, kNil);
    }
    const Node node = nodes_[t];
    if (key < node.key) {
        const NodeId l = insert_rec(node.left, key, payload);
        return make_balanced(l, node.key, node.payload, node.right);
    }
    if (key > node.key) {
        const NodeId r = insert_rec(node.right, key, payload);
        return make_balanced(node.left, node.key, node.payload, r);
    }
    throw std::invalid_argument("duplicate key " + std::to_string(key));
}

NodeId Forest::erase_min(NodeId t, Node &removed) {
    const Node node = nodes_[t];
    if (node.left == kNil) {
        removed = node;
        return node.right;
    }
    const NodeId l = erase_min(node.left, removed);
    return make_balanced(l, node.key, node.payload, node.right);
}

NodeId Forest::erase_rec(NodeId t, int key) {
    if (t == kNil) {
        throw std::invalid_argument("missing key " + std::to_string(key));
    }
    const Node node = nodes_[t];
    if (key < node.key) {
        const NodeId l = erase_rec(node.left, key);
        return make_balanced(l, node.key, node.payload, node.right);
    }
    if (key > node.key) {
        const NodeId r = erase_rec(node.right, key);
        return make_balanced(node.left, node.key, node.payload, r);
    }
    if (node.left == kNil) {
        return node.right;
    }
    if (node.right == kNil) {
        return node.left;
    }
    Node successor{};
    const NodeId r = erase_min(node.right, successor);
    return make_balanced(node.left, successor.key, successor.payload, r);
}

Version Forest::insert(Version t, int key, std::int32_t payload) { return Version(insert_rec(t.root_, key, payload)); }

Version Forest::erase(Version t, int key) { return Version(erase_rec(t.root_, key)); }

std::optional<Entry> Forest::pred(Version t, int x) const {
    std::optional<Entry> best;
    std::size_t before = 0;
    for (NodeId cur = t.root_; cur != kNil;) {
        const Node &node = nodes_[cur];
        if (node.key < x) {
            const auto r = before + static_cast<std::size_t>(size_of(node.left));
            best = Entry{node.key, node.payload, r};
            before = r + 1;
            cur = node.right;
        } else {
            cur = node.left;
        }
    }
    return best;
}

std::size_t Forest::rank(Version t, int key) const {
    std::size_t before = 0;
    for (NodeId cur = t.root_; cur != kNil;) {
        const Node &node = nodes_[cur];
        if (key < node.key) {
            cur = node.left;
        } else if (key > node.key) {
            before += static_cast<std::size_t>(size_of(node.left)) + 1;
            cur = node.right;
        } else {
            return before + static_cast<std::size_t>(size_of(node.left));
        }
    }
    throw std::invalid_argument("rank of missing key " + std::to_string(key));
}

Entry Forest::select(Version t, std::size_t h) const {
    if (h >= size(t)) {
        throw std::out_of_range("select rank " + std::to_string(h) + " out of range");
    }
    const std::size_t target = h;
    for (NodeId cur = t.root_;;) {
        const Node &node = nodes_[cur];
        const auto left = static_cast<std::size_t>(size_of(node.left));
        if (h < left) {
            cur = node.left;
        } else if (h == left) {
            return Entry{node.key, node.payload, target};
        } else {
            h -= left + 1;
            cur = node.right;
        }
    }
}

bool Forest::contains(Version t, int key) const {
    for (NodeId cur = t.root_; cur != kNil;) {
        const Node &node = nodes_[cur];
        if (key == node.key) {
            return true;
        }
        cur = key < node.key ? node.left : node.right;
    }
    return false;
}

std::vector<int> Forest::keys(Version t) const {
    std::vector<int> out;
    out.reserve(size(t));
    std::vector<NodeId> stack;
    for (NodeId cur = t.root_; cur != kNil || !stack.empty();) {
        while (cur != kNil) {
            stack.push_back(cur);
            cur = nodes_[cur].left;
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(nodes_[cur].key);
        cur = nodes_[cur].right;
    }
    return out;
}

bool Forest::check_rec(NodeId t, const int *lo, const int *hi) const {
    if (t == kNil) {
        return true;
    }
    const Node &node = nodes_[t];
    if ((lo && node.key <= *lo) || (hi && node.key >= *hi)) {
        return false;
    }
    if (node.size != size_of(node.left) + size_of(node.right) + 1) {
        return false;
    }
    if (node.height != std::max(height_of(node.left), height_of(node.right)) + 1 ||
        std::abs(height_of(node.left) - height_of(node.right)) > 1) {
        return false;
    }
    return check_rec(node.left, lo, &node.key) && check_rec(node.right, &node.key, hi);
}

bool Forest::check_invariants(Version t) const { return check_rec(t.root_, nullptr, nullptr); }

} // namespace lcsk::pstree
