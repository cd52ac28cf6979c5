use covsym::{qword, symmetrizer};
use std::time::Instant;

fn peak_rss_mb() -> f64 {
    let status = std::fs::read_to_string("/proc/self/status").unwrap_or_default();
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            let kb: f64 = rest.trim().trim_end_matches(" kB").trim().parse().unwrap_or(0.0);
            return kb / 1024.0;
        }
    }
    0.0
}

fn main() {
    let t = Instant::now();
    let h = symmetrizer::taylor_operator(30);
    println!(
        "n=30: {} terms (expect {}), {:?}, peak RSS {:.0} MB",
        h.num_terms(),
        qword::word_count_of_degree(30).unwrap(),
        t.elapsed(),
        peak_rss_mb()
    );
}
