#include "membrane/function_pair.hpp"

#include <algorithm>

namespace membrane {

FunctionPair matrix_apply(const Mat2& m, const FunctionPair& p) {
    const LineFunction t1 = reflect(p.first);
    const LineFunction t2 = reflect(p.second);
    LineFunction top = axpy(m[0][0], t1, scale(m[0][1], t2));
    LineFunction bot = axpy(m[1][0], p.first, scale(m[1][1], p.second));
    return {std::move(top), std::move(bot)};
}

FunctionPair flip_Jpair(const FunctionPair& p) { return {negate(p.first), p.second}; }

SharpFunction restrict_pair(const FunctionPair& p) {
    const int c = p.first.grid.center_index();
    SharpFunction out{p.first.grid,
                      std::vector<double>(p.first.samples.begin(),
                                          p.first.samples.begin() + c + 1),
                      std::vector<double>(p.second.samples.begin() + c,
                                          p.second.samples.end()),
                      p.first.limit_neg, p.second.limit_pos};
    return out;
}

FunctionPair add(const FunctionPair& p, const FunctionPair& q) {
    return {add(p.first, q.first), add(p.second, q.second)};
}

FunctionPair subtract(const FunctionPair& p, const FunctionPair& q) {
    return {subtract(p.first, q.first), subtract(p.second, q.second)};
}

FunctionPair scale(double a, const FunctionPair& p) {
    return {scale(a, p.first), scale(a, p.second)};
}

double sup_norm(const FunctionPair& p) {
    return std::max(sup_norm(p.first), sup_norm(p.second));
}

double sup_dist(const FunctionPair& p, const FunctionPair& q) {
    return std::max(sup_dist(p.first, q.first), sup_dist(p.second, q.second));
}

bool bitwise_equal(const FunctionPair& p, const FunctionPair& q) {
    return bitwise_equal(p.first, q.first) && bitwise_equal(p.second, q.second);
}

}  // namespace membrane
