// SPDX-License-Identifier: Apache-2.0

//! Benchmarks for the core algorithms live under `benches/`.
