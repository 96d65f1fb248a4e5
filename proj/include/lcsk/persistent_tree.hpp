#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lcsk::pstree {

using NodeId = std::int32_t;
inline constexpr NodeId kNil = -1;

/// An immutable tree version. Cheap to copy; refers to nodes in its Forest.
class Version {
  public:
    Version() = default;
    bool empty() const noexcept { return root_ == kNil; }
    NodeId root() const noexcept { return root_; }
    friend bool operator==(const Version &, const Version &) = default;

  private:
    friend class Forest;
    explicit Version(NodeId root) : root_(root) {}
    NodeId root_ = kNil;
};

struct Entry {
    int key = 0;
    std::int32_t payload = -1;
    std::size_t rank = 0;
};

/// Arena of AVL nodes shared by every version. Updates copy the search path
/// and never touch existing nodes, so all earlier versions stay valid.
class Forest {
  public:
    Version insert(Version t, int key, std::int32_t payload = -1);
    Version erase(Version t, int key);

    /// Largest key strictly below x, with its rank.
    std::optional<Entry> pred(Version t, int x) const;
    /// Number of keys smaller than key; key must be present.
    std::size_t rank(Version t, int key) const;
    /// Entry at 0-based rank h.
    Entry select(Version t, std::size_t h) const;
    bool contains(Version t, int key) const;

    std::size_t size(Version t) const noexcept { return static_cast<std::size_t>(size_of(t.root_)); }
    std::vector<int> keys(Version t) const;

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t memory_bytes() const noexcept { return nodes_.capacity() * sizeof(Node); }
    void reserve(std::size_t nodes) { nodes_.reserve(nodes); }

    /// Structural check: key order, subtree sizes, heights and AVL balance.
    bool check_invariants(Version t) const;

  private:
    struct Node {
        int key;
        std::int32_t payload;
        NodeId left;
        NodeId right;
        std::int32_t size;
        std::int8_t height;
    };

    std::int32_t size_of(NodeId t) const noexcept { return t == kNil ? 0 : nodes_[t].size; }
    int height_of(NodeId t) const noexcept { return t == kNil ? 0 : nodes_[t].height; }

    NodeId make(NodeId left, int key, std::int32_t payload, NodeId right);
    NodeId make_balanced(NodeId left, int key, std::int32_t payload, NodeId right);
    NodeId insert_rec(NodeId t, int key, std::int32_t payload);
    NodeId erase_rec(NodeId t, int key);
    NodeId erase_min(NodeId t, Node &removed);
    bool check_rec(NodeId t, const int *lo, const int *hi) const;

    std::vector<Node> nodes_;
};

} // namespace lcsk::pstree
