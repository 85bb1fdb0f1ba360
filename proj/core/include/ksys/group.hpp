#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ksys/cyclo.hpp"
#include "ksys/matrix.hpp"
#include "ksys/poly.hpp"

namespace ksys {

struct ReflectionGroup;

// Matrix -> element-index lookup; build once, reuse for repeated products.
class ElementIndex {
  public:
    explicit ElementIndex(const ReflectionGroup& G);
    int find(const Matrix<Cyclo>& m) const;  // -1 if absent

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// A finite complex reflection group given by the faithful matrices of its
// elements on the reflection representation h. Elements are identified with
// their matrices; element 0 is the identity and every element records the
// BFS step (parent, generator) that produced it, so per-module actions of all
// elements can be rebuilt with one product each.
struct ReflectionGroup {
    std::string name;
    int dim_h = 0;
    int conductor = 1;
    std::vector<Matrix<Cyclo>> generators;
    std::vector<Matrix<Cyclo>> elements;
    std::vector<std::vector<int>> words;          // generator word per element
    std::vector<std::pair<int, int>> bfs_step;    // (parent element, generator); identity: (-1,-1)
    std::vector<int> inverse;                     // element index of the inverse

    std::vector<int> class_of;                    // element -> class
    std::vector<int> class_rep;                   // class -> representative element
    std::vector<long> class_sizes;

    long order() const { return static_cast<long>(elements.size()); }
    int num_classes() const { return static_cast<int>(class_rep.size()); }
    int identity_class() const { return class_of[0]; }

    int element_index(const Matrix<Cyclo>& m) const;  // -1 if absent
    int multiply(int a, int b) const;                 // index of elements[a]*elements[b]
    int element_of_word(const std::vector<int>& word) const;

    // Reorder conjugacy classes by the given permutation of class indices.
    void reorder_classes(const std::vector<int>& new_to_old);
};

// Breadth-first closure of the generators, conjugacy classes by conjugation
// orbits. Errors: group_too_large if the closure exceeds `bound`,
// invalid_generator for non-square/singular/mismatched generators.
ReflectionGroup generate_group(const std::vector<Matrix<Cyclo>>& generators, int dim_h,
                               int conductor, long bound);

// det(1 - q * w|_h) with Cyclo coefficients.
Poly<Cyclo> char_poly_h(const ReflectionGroup& G, int element);

// Cycle type of a permutation-group element recovered from
// det(1 - q w|_h) * (1 - q) = prod (1 - q^{c_i}); used to label S_n classes.
std::vector<int> cycle_type_from_charpoly(const Poly<Cyclo>& cp, int n);

}  // namespace ksys
