int next_perfect_square(int n) {
    double sqrt_n = std::sqrt(n);
    int next_int = std::ceil(sqrt_n);
    if (next_int * next_int == n)
        next_int += 1;
    return next_int * next_int;
}
