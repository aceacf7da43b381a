#ifndef QLV_EXPR_HPP
#define QLV_EXPR_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "qlv/karith.hpp"

namespace qlv {

enum class ExprKind { Const, Feature, Act, Agg, AggV, Add, Scale };

class ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// One node of a qL expression DAG. Nodes are created through an ExprFactory,
// which interns them so that structurally identical subterms share one node;
// identity comparisons are pointer comparisons. No algebraic rewriting is
// ever applied: saturating + is non-associative, the tree shape carries
// meaning.
class ExprNode {
public:
    ExprKind kind;
    int value = 0;             // Const: c; Feature: 0-based index; Scale: c
    ExprPtr a, b;              // children (a for unary, a/b for Add)
    const Activation* act = nullptr;  // Act only; owned by the factory

    ExprNode(ExprKind k, int v, ExprPtr ca, ExprPtr cb, const Activation* al)
        : kind(k), value(v), a(std::move(ca)), b(std::move(cb)), act(al) {}
};

// A formula is a single comparison expr >= threshold.
struct Formula {
    ExprPtr expr;
    int threshold = 0;
};

// Hash-consing builder for expression DAGs over a fixed KConfig. Constants
// and scale factors are range-checked on construction. Activations are
// interned by value so table activations compare cheaply afterwards.
class ExprFactory {
public:
    explicit ExprFactory(KConfig cfg) : cfg_(cfg) {}

    const KConfig& config() const { return cfg_; }

    ExprPtr constant(int c) {
        require_in_k(c, "constant");
        return intern(ExprKind::Const, c, nullptr, nullptr, nullptr);
    }
    ExprPtr feature(int index) {
        if (index < 0) throw ValidationError("negative feature index");
        return intern(ExprKind::Feature, index, nullptr, nullptr, nullptr);
    }
    ExprPtr act(const Activation& alpha, ExprPtr e) {
        return intern(ExprKind::Act, 0, std::move(e), nullptr, intern_act(alpha));
    }
    ExprPtr agg(ExprPtr e) { return intern(ExprKind::Agg, 0, std::move(e), nullptr, nullptr); }
    ExprPtr agg_v(ExprPtr e) { return intern(ExprKind::AggV, 0, std::move(e), nullptr, nullptr); }
    ExprPtr add(ExprPtr l, ExprPtr r) {
        return intern(ExprKind::Add, 0, std::move(l), std::move(r), nullptr);
    }
    ExprPtr scale(int c, ExprPtr e) {
        require_in_k(c, "scale factor");
        return intern(ExprKind::Scale, c, std::move(e), nullptr, nullptr);
    }

    // Convenience for compiler code: e + (-k), validated against K.
    ExprPtr add_const(ExprPtr e, int c) {
        if (c == 0) return e;
        return add(std::move(e), constant(c));
    }

    Formula formula(ExprPtr e, int threshold) {
        require_in_k(threshold, "threshold");
        return Formula{std::move(e), threshold};
    }

private:
    void require_in_k(int v, const char* what) const {
        if (!cfg_.contains(v))
            throw RangeError(std::string(what) + " " + std::to_string(v) +
                             " outside K with bitwidth " + std::to_string(cfg_.bitwidth()));
    }

    struct Key {
        ExprKind kind;
        int value;
        const ExprNode* a;
        const ExprNode* b;
        const Activation* act;
        bool operator==(const Key& o) const {
            return kind == o.kind && value == o.value && a == o.a && b == o.b && act == o.act;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = static_cast<std::size_t>(k.kind);
            auto mix = [&h](std::size_t x) {
                h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            };
            mix(static_cast<std::size_t>(static_cast<unsigned>(k.value)));
            mix(reinterpret_cast<std::size_t>(k.a));
            mix(reinterpret_cast<std::size_t>(k.b));
            mix(reinterpret_cast<std::size_t>(k.act));
            return h;
        }
    };

    ExprPtr intern(ExprKind kind, int value, ExprPtr a, ExprPtr b, const Activation* act) {
        Key key{kind, value, a.get(), b.get(), act};
        auto it = pool_.find(key);
        if (it != pool_.end()) return it->second;
        auto node = std::make_shared<const ExprNode>(kind, value, std::move(a), std::move(b), act);
        pool_.emplace(key, node);
        return node;
    }

    const Activation* intern_act(const Activation& alpha) {
        for (const auto& a : acts_)
            if (*a == alpha) return a.get();
        acts_.push_back(std::make_unique<Activation>(alpha));
        return acts_.back().get();
    }

    KConfig cfg_;
    std::unordered_map<Key, ExprPtr, KeyHash> pool_;
    std::vector<std::unique_ptr<Activation>> acts_;
};

// All DAG nodes of e, children before parents, in deterministic DFS
// postorder. Shared nodes appear once.
std::vector<ExprPtr> subexpressions(const ExprPtr& e);
inline std::vector<ExprPtr> subexpressions(const Formula& f) { return subexpressions(f.expr); }

std::size_t dag_size(const ExprPtr& e);

// Highest feature index used, plus one (0 for feature-free expressions).
int feature_arity(const ExprPtr& e);

}  // namespace qlv

#endif  // QLV_EXPR_HPP
