#include <benchmark/benchmark.h>

#include <random>

#include "pcdec/sim.hpp"

using namespace pcdec;

namespace {

ProductCode make_pc_64() {
    const GfTable f16(4);
    return {RsCode(f16, 8, 4), RsCode(f16, 8, 6)};
}

ProductCode make_pc_256() {
    const GfTable f32(5);
    return {RsCode(f32, 16, 12), RsCode(f32, 16, 14)};
}

std::vector<WordMatrix> make_frames(const ProductCode& pc, double p, int count) {
    std::vector<WordMatrix> frames;
    frames.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto rng = frame_rng(42, p, i);
        std::vector<gf_elem> msg(pc.msg_rows() * pc.msg_cols());
        for (auto& s : msg) s = static_cast<gf_elem>(rng() % pc.field().q());
        WordMatrix w = pc.encode(msg);
        channel_apply(pc.field(), p, w, rng);
        frames.push_back(std::move(w));
    }
    return frames;
}

void BM_RsDecodeTwoErrors(benchmark::State& state) {
    const GfTable f16(4);
    const RsCode code(f16, 8, 4);
    std::mt19937_64 rng(1);
    std::vector<gf_elem> msg(4), out(8);
    for (auto& s : msg) s = static_cast<gf_elem>(rng() & 15);
    auto r = code.encode(msg);
    r[1] ^= 7;
    r[5] ^= 3;
    for (auto _ : state) {
        auto res = code.decode(r, {}, out);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_RsDecodeTwoErrors);

void BM_Iterative64(benchmark::State& state) {
    const auto pc = make_pc_64();
    const auto frames = make_frames(pc, 0.06, 256);
    size_t i = 0;
    for (auto _ : state) {
        auto rep = decode_iterative(pc, frames[i++ & 255]);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Iterative64);

void BM_Gmd64(benchmark::State& state) {
    const auto pc = make_pc_64();
    const auto frames = make_frames(pc, 0.06, 256);
    size_t i = 0;
    for (auto _ : state) {
        auto rep = decode_gmd(pc, frames[i++ & 255]);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Gmd64);

void BM_Gd64(benchmark::State& state) {
    const auto pc = make_pc_64();
    const auto frames = make_frames(pc, 0.06, 256);
    size_t i = 0;
    for (auto _ : state) {
        auto rep = decode_gd(pc, frames[i++ & 255]);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Gd64);

void BM_IterativePp256(benchmark::State& state) {
    const auto pc = make_pc_256();
    const auto frames = make_frames(pc, 0.05, 256);
    size_t i = 0;
    for (auto _ : state) {
        auto rep = decode_iterative_pp(pc, frames[i++ & 255], PostProc::proposed);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_IterativePp256);

}  // namespace

BENCHMARK_MAIN();
