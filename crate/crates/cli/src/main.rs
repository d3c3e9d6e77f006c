// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let code = archimedes::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
