use pure_betti::gorenstein::selfdual_search;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let c = args.next().map(|s| s.parse()).transpose()?.unwrap_or(15);
    let d_max = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
    for rec in selfdual_search(c, d_max)? {
        println!("{}\n  B = {}  total {}  binomial violations {:?}", rec.d, rec.b, rec.report.total, rec.report.conj1_violations);
    }
    Ok(())
}
