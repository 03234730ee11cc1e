#pragma once

#include <string>
#include <vector>

#include "foodrec/errors.hpp"

namespace foodrec {

struct Ingredient {
    int id = 0;
    std::string name;

    bool operator==(const Ingredient&) const = default;
};

// Categories index into [0, n_categories); a recipe may carry more than one.
struct Recipe {
    int id = 0;
    std::string name;
    std::vector<int> ingredients; // sorted, unique, non-empty
    std::vector<int> categories;  // sorted, unique, non-empty

    bool operator==(const Recipe&) const = default;
};

struct HealthTag {
    int id = 0;
    std::string name;
    std::vector<int> suitable;   // ingredient ids, sorted; disjoint from unsuitable
    std::vector<int> unsuitable; // ingredient ids, sorted

    bool operator==(const HealthTag&) const = default;
};

struct UserProfile {
    int id = 0;
    std::vector<int> tags;           // sorted, non-empty
    std::vector<std::string> tokens; // synthetic tweet stream, _eos_-separated
    std::vector<int> inventory;      // ingredient ids, sorted

    bool operator==(const UserProfile&) const = default;
};

// <tag, suitable recipe, unsuitable recipe>: the suitable recipe contains at
// least one suitable and no unsuitable ingredients for the tag; the unsuitable
// recipe contains at least one unsuitable ingredient.
struct HealthTriple {
    int tag = 0;
    int suitable_recipe = 0;
    int unsuitable_recipe = 0;

    bool operator==(const HealthTriple&) const = default;
};

struct UserInteractions {
    int user = 0;
    std::vector<int> positives;
    std::vector<int> negatives;

    bool operator==(const UserInteractions&) const = default;
};

struct InteractionSet {
    std::vector<UserInteractions> users;

    const UserInteractions* find(int user_id) const;

    bool operator==(const InteractionSet&) const = default;
};

struct Corpus {
    std::vector<Ingredient> ingredients;
    std::vector<Recipe> recipes;
    std::vector<HealthTag> tags;
    std::vector<UserProfile> users;
    std::vector<HealthTriple> triples;
    InteractionSet interactions;
    int n_categories = 0;

    bool operator==(const Corpus&) const = default;
};

// Cross-record consistency: dense ingredient/recipe/tag/user ids, unique
// names, every referenced id resolvable, per-type invariants (non-empty
// category/ingredient/tag sets, suitable/unsuitable disjoint, positives
// disjoint from negatives). Throws IntegrityError naming the offender.
void validate_corpus(const Corpus& corpus);

} // namespace foodrec
