use symdyn::subshift::metric_d;
use symdyn::{Alphabet, GroupCtx, Pattern, Sft, Symbol};

fn forbid(words: &[&str]) -> symdyn::Result<Sft> {
    let z = GroupCtx::zd(1)?;
    let pats = words
        .iter()
        .map(|w| {
            let syms: Vec<Symbol> = w.bytes().map(|b| Symbol((b - b'0') as u16)).collect();
            Pattern::from_run(&z, 0, &syms)
        })
        .collect::<symdyn::Result<_>>()?;
    Sft::from_patterns(&z, &Alphabet::numeric(2)?, pats)
}

fn main() -> symdyn::Result<()> {
    let pool = [
        ("full", forbid(&[])?),
        ("golden", forbid(&["11"])?),
        ("no 111", forbid(&["111"])?),
        ("no 11111", forbid(&["11111"])?),
        ("alternating", forbid(&["00", "11"])?),
    ];
    print!("{:>12}", "");
    for (name, _) in &pool {
        print!("{name:>12}");
    }
    println!();
    for (a, x) in &pool {
        print!("{a:>12}");
        for (_, y) in &pool {
            print!("{:>12}", metric_d(x, y, 4, 0)?.distance.to_string());
        }
        println!();
    }
    let r = metric_d(&pool[0].1, &pool[3].1, 4, 0)?;
    println!("\nfull vs no 11111: {r:?}");
    Ok(())
}
