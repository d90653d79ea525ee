use crate::error::{Error, Result};
use std::fmt::Write;

fn power(name: &str, k: u32) -> String {
    match k {
        0 => "1".to_string(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    }
}

/// `Z/n` with `R(g^a ⊗ g^b) = q^(ab)` over `Q(ζ_n)`.
pub fn anyonic_text(n: u32) -> String {
    let mut s = String::new();
    writeln!(s, "# Z/{n} with the bicharacter R(g^a % g^b) = q^(ab).").unwrap();
    writeln!(s, "[field]\ncyclotomic:{n}\n").unwrap();
    writeln!(s, "[generators]\ng\n").unwrap();
    writeln!(s, "[relations]\n{} = 1\n", power("g", n)).unwrap();
    writeln!(s, "[coproduct]\ng = (g)%(g)\n").unwrap();
    writeln!(s, "[counit]\ng = 1\n").unwrap();
    writeln!(s, "[antipode]\ng = {}\n", power("g", n - 1)).unwrap();
    writeln!(s, "[dqs]\ng, g = q").unwrap();
    s
}

/// The free braided line `k[θ]` graded by the anyonic host.
pub fn braided_line_text(n: u32) -> String {
    let mut s = String::new();
    writeln!(s, "# The braided line k[theta] over anyonic({n}).").unwrap();
    writeln!(s, "[field]\ncyclotomic:{n}\n").unwrap();
    writeln!(s, "[generators]\ntheta\n").unwrap();
    writeln!(s, "[host]\nanyonic({n})\n").unwrap();
    writeln!(s, "[coaction]\nside right\ntheta = (theta)%({})\n", power("g", n - 1)).unwrap();
    writeln!(s, "[coproduct]\ntheta = (theta)%(1) + (1)%(theta)\n").unwrap();
    writeln!(s, "[counit]\ntheta = 0\n").unwrap();
    writeln!(s, "[antipode]\ntheta = -theta").unwrap();
    s
}

/// `k(Z/m)^n` with the bicharacter `β(g_i ⊗ g_j) = q^(ω_ij)` over `Q(ζ_m)`.
pub fn group_bichar_text(m: u32, n: usize, omega: &[Vec<i64>]) -> String {
    let gens: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
    let mut s = String::new();
    writeln!(s, "# (Z/{m})^{n} with a bicharacter.").unwrap();
    writeln!(s, "[field]\ncyclotomic:{m}\n").unwrap();
    writeln!(s, "[generators]\n{}\n", gens.join(" ")).unwrap();
    writeln!(s, "[relations]").unwrap();
    for g in &gens {
        writeln!(s, "{} = 1", power(g, m)).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            writeln!(s, "{} {} = {} {}", gens[j], gens[i], gens[i], gens[j]).unwrap();
        }
    }
    writeln!(s, "\n[coproduct]").unwrap();
    for g in &gens {
        writeln!(s, "{g} = ({g})%({g})").unwrap();
    }
    writeln!(s, "\n[counit]").unwrap();
    for g in &gens {
        writeln!(s, "{g} = 1").unwrap();
    }
    writeln!(s, "\n[antipode]").unwrap();
    for g in &gens {
        writeln!(s, "{g} = {}", power(g, m - 1)).unwrap();
    }
    writeln!(s, "\n[dqs]").unwrap();
    for i in 0..n {
        for j in 0..n {
            let e = omega[i][j].rem_euclid(m as i64);
            writeln!(s, "{}, {} = {}", gens[i], gens[j], if e == 0 { "1".into() } else { power("q", e as u32) })
                .unwrap();
        }
    }
    s
}

/// A parsed catalog name such as `anyonic(3)` or `group_bichar(3,2,[[0,1],[-1,0]])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    File(String),
    Anyonic(u32),
    BraidedLine(u32),
    GroupBichar { m: u32, n: usize, omega: Vec<Vec<i64>> },
}

fn bad(name: &str, why: &str) -> Error {
    Error::UnknownName(format!("{name} ({why})"))
}

pub fn parse_name(name: &str) -> Result<CatalogName> {
    let name = name.trim();
    let name = name.strip_prefix("catalog:").unwrap_or(name);
    let Some(open) = name.find('(') else {
        return Ok(match name {
            "braided_line" => CatalogName::BraidedLine(3),
            _ => CatalogName::File(name.to_string()),
        });
    };
    let head = &name[..open];
    let args = name[open + 1..].strip_suffix(')').ok_or_else(|| bad(name, "unbalanced parentheses"))?;
    let nums: Vec<i64> = args
        .split(|c: char| c == ',' || c == '[' || c == ']' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| bad(name, "arguments must be integers")))
        .collect::<Result<_>>()?;
    let positive = |k: i64| -> Result<u32> {
        if (1..=1000).contains(&k) {
            Ok(k as u32)
        } else {
            Err(bad(name, "order must be a positive integer"))
        }
    };
    match head {
        "anyonic" | "braided_line" => {
            if nums.len() != 1 {
                return Err(bad(name, "expected one argument"));
            }
            let n = positive(nums[0])?;
            Ok(if head == "anyonic" { CatalogName::Anyonic(n) } else { CatalogName::BraidedLine(n) })
        }
        "group_bichar" => {
            if nums.len() < 2 {
                return Err(bad(name, "expected m, n and a matrix"));
            }
            let m = positive(nums[0])?;
            let n = positive(nums[1])? as usize;
            let rest = &nums[2..];
            let omega = if rest.len() <= 1 && rest.iter().all(|&x| x == 0) {
                vec![vec![0; n]; n]
            } else if rest.len() == n * n {
                rest.chunks(n).map(|r| r.to_vec()).collect()
            } else {
                return Err(bad(name, "matrix needs n*n entries"));
            };
            Ok(CatalogName::GroupBichar { m, n, omega })
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
