use symdyn::decision::{check_greedy_prefix, medvedev_zero_witness};
use symdyn::{Alphabet, Certificate, GroupCtx, Pattern, Sft, Symbol};

fn main() -> symdyn::Result<()> {
    let z = GroupCtx::zd(1)?;
    let bits = Alphabet::numeric(2)?;
    let forbid = |ws: &[&[u16]]| -> symdyn::Result<Sft> {
        let pats = ws
            .iter()
            .map(|w| Pattern::from_run(&z, 0, &w.iter().map(|&s| Symbol(s)).collect::<Vec<_>>()))
            .collect::<symdyn::Result<_>>()?;
        Sft::from_patterns(&z, &bits, pats)
    };
    let shifts = [
        ("golden mean", forbid(&[&[1, 1]])?),
        ("alternating", forbid(&[&[0, 0], &[1, 1]])?),
        ("no zeros", forbid(&[&[0]])?),
        ("period 011", forbid(&[&[0, 0], &[1, 1, 1], &[0, 1, 0]])?),
    ];
    for (name, x) in &shifts {
        print!("{name:>16}:");
        let mut previous: Option<Pattern> = None;
        for n in 0..=4 {
            let p = medvedev_zero_witness(x, n)?;
            if let Some(prev) = &previous {
                assert_eq!(&p.restrict(prev.support())?, prev, "greedy prefixes are coherent");
            }
            previous = Some(p);
        }
        let p = previous.unwrap();
        let (start, run) = p.to_run(&z)?;
        let text: String = run.iter().map(|s| s.unwrap().0.to_string()).collect();
        println!(" {text} from {start}");
        assert!(check_greedy_prefix(x, 4, &p)?);
        Certificate::point_prefix(x, 4, &p).verify()?;
    }
    let empty = forbid(&[&[0], &[1]])?;
    println!("{:>16}: {}", "empty", medvedev_zero_witness(&empty, 2).unwrap_err());
    Ok(())
}
