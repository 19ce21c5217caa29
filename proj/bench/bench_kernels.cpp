// Serial vs OpenMP timing of the batch kernels on synthetic images.
#include <chrono>
#include <cstdio>
#include <random>

#include "interference/bp_baseline.hpp"
#include "interference/kernels.hpp"

using namespace interference;

namespace {

template <typename F>
double seconds(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 400;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    const std::vector<int> classes{0, 1, 2, 4};

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> px(0, 3);
    std::vector<RawImage> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& img = images[static_cast<std::size_t>(i)];
        img.label = classes[static_cast<std::size_t>(i) % classes.size()];
        for (auto& p : img.pixels) p = px(rng) == 0 ? 255 : 0;
    }

    const Spacetime space = Spacetime::mnist(classes);
    const auto fields = mnist_fields(space);
    RoutePolicy policy = RoutePolicy::uniform(space);
    const EncodedSet set = encode_set(images, 1);

    std::vector<int> a, b;
    const double ts = seconds([&] { a = predict_batch_serial(set, policy, space, fields); }, reps);
    const double tp = seconds([&] { b = predict_batch(set, policy, space, fields); }, reps);
    std::printf("predict_batch  n=%d  serial %.4fs  parallel %.4fs  speedup %.2fx  threads %d  match %s\n", n, ts, tp,
                ts / tp, parallel_threads(), a == b ? "yes" : "NO");

    std::vector<std::vector<double>> fa, fb;
    const double fs = seconds([&] { fa = bp::features_serial(set); }, reps);
    const double fp = seconds([&] { fb = bp::features(set); }, reps);
    std::printf("bp::features   n=%d  serial %.4fs  parallel %.4fs  speedup %.2fx  match %s\n", n, fs, fp, fs / fp,
                fa == fb ? "yes" : "NO");
    return (a == b && fa == fb) ? 0 : 1;
}
