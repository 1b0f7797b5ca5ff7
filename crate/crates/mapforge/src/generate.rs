//! Named generators, shared by `mapforge gen` and the corpus.

use mapforge_core::{
    construct::{self, StripParity},
    Error, FlagSystem, Result,
};

pub const GENERATORS: &[(&str, &str)] = &[
    ("tetrahedron | cube | octahedron | dodecahedron | icosahedron", ""),
    ("tri-torus", "M N"),
    ("grid", "M N K"),
    ("strip", "H even|odd [SWAP...]"),
    ("gluing", "WORD[,WORD...]"),
    ("crosscaps", "K"),
    ("cube-maniplex", "D"),
];

fn numbers(name: &str, params: &[&str], want: usize) -> Result<Vec<usize>> {
    let bad = || Error::BadParameters(format!("{name} expects {want} non-negative integers"));
    if params.len() != want {
        return Err(bad());
    }
    params.iter().map(|p| p.parse().map_err(|_| bad())).collect()
}

pub fn generate(name: &str, params: &[&str]) -> Result<FlagSystem> {
    match name {
        "tri-torus" => {
            let v = numbers(name, params, 2)?;
            construct::tri_torus(v[0], v[1])
        }
        "grid" => {
            let v = numbers(name, params, 3)?;
            construct::grid_g(v[0], v[1], v[2])
        }
        "strip" => {
            let bad = || Error::BadParameters("strip expects H, even|odd, then swap positions".into());
            let (h, rest) = params.split_first().ok_or_else(bad)?;
            let (parity, swaps) = rest.split_first().ok_or_else(bad)?;
            let parity = match *parity {
                "even" => StripParity::Even,
                "odd" => StripParity::Odd,
                _ => return Err(bad()),
            };
            let h = h.parse().map_err(|_| bad())?;
            let swaps = swaps
                .iter()
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<Vec<usize>>>()?;
            construct::strip_map(h, &swaps, parity)
        }
        "gluing" => match params {
            [word] => construct::polygon_gluing(word),
            _ => Err(Error::BadParameters("gluing expects one word".into())),
        },
        "crosscaps" => construct::crosscaps(numbers(name, params, 1)?[0]),
        "cube-maniplex" => construct::cube_maniplex(numbers(name, params, 1)?[0]),
        _ if construct::PLATONIC_NAMES.contains(&name) => {
            numbers(name, params, 0)?;
            construct::platonic(name)
        }
        _ => Err(Error::UnknownName(name.into())),
    }
}

/// Parses `name:p1,p2` as used in corpus specifications.
pub fn generate_spec(spec: &str) -> Result<FlagSystem> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let params: Vec<&str> = params.split(',').filter(|p| !p.is_empty()).collect();
    generate(name, &params)
}
