//! JSON-over-HTTP session service for the laboratory.
//!
//! Each session owns a beam stack and an undo history. Sessions live in a
//! concurrent map and are locked one at a time, so requests to different
//! sessions run in parallel while requests to the same session are
//! serialized.

use std::future::Future;
use std::io;
use std::net::{Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use tokio::net::TcpListener;

mod openapi;
mod routes;
pub mod store;
pub mod wire;

pub use routes::{router, ApiError};
pub use store::{Session, SessionStore, Snapshot};
pub use wire::{BeamView, StackView, WireCommand};

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_TTL: Duration = Duration::from_secs(24 * 60 * 60);

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub bind: SocketAddr,
    /// Sessions idle for longer than this are discarded.
    pub ttl: Duration,
    /// Where to write the session snapshot on shutdown, and read it back
    /// from on start.
    pub snapshot_path: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            bind: SocketAddr::from((Ipv4Addr::LOCALHOST, DEFAULT_PORT)),
            ttl: DEFAULT_TTL,
            snapshot_path: None,
        }
    }
}

/// Bind `config.bind` and serve until `shutdown` resolves.
pub async fn serve<F>(config: ServiceConfig, shutdown: F) -> io::Result<()>
where
    F: Future<Output = ()> + Send + 'static,
{
    let listener = TcpListener::bind(config.bind).await?;
    serve_on(listener, config, shutdown).await
}

/// Serve on an already bound listener. `config.bind` is ignored.
pub async fn serve_on<F>(
    listener: TcpListener,
    config: ServiceConfig,
    shutdown: F,
) -> io::Result<()>
where
    F: Future<Output = ()> + Send + 'static,
{
    let store = Arc::new(SessionStore::new(config.ttl));
    if let Some(path) = &config.snapshot_path {
        if let Some(snapshot) = load_snapshot(path).await? {
            let count = store
                .restore(&snapshot)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
            tracing::info!(count, path = %path.display(), "sessions restored");
        }
    }

    let sweeper = {
        let store = Arc::clone(&store);
        let period = (config.ttl / 4).clamp(Duration::from_secs(1), Duration::from_secs(60));
        tokio::spawn(async move {
            let mut tick = tokio::time::interval(period);
            loop {
                tick.tick().await;
                let gone = store.sweep();
                if gone > 0 {
                    tracing::debug!(gone, "expired sessions removed");
                }
            }
        })
    };

    tracing::info!(addr = %listener.local_addr()?, "listening");
    let result = axum::serve(listener, router(Arc::clone(&store)))
        .with_graceful_shutdown(shutdown)
        .await;
    sweeper.abort();

    if let Some(path) = &config.snapshot_path {
        store.sweep();
        save_snapshot(path, &store.snapshot()).await?;
        tracing::info!(count = store.len(), path = %path.display(), "sessions saved");
    }
    result
}

pub async fn load_snapshot(path: &Path) -> io::Result<Option<Snapshot>> {
    match tokio::fs::read(path).await {
        Ok(bytes) => serde_json::from_slice(&bytes)
            .map(Some)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e)),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e),
    }
}

pub async fn save_snapshot(path: &Path, snapshot: &Snapshot) -> io::Result<()> {
    let text = serde_json::to_vec_pretty(snapshot).map_err(io::Error::other)?;
    let tmp = path.with_extension("tmp");
    tokio::fs::write(&tmp, text).await?;
    tokio::fs::rename(&tmp, path).await
}

/// Resolves on Ctrl-C or SIGTERM.
pub async fn shutdown_signal() {
    let ctrl_c = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let term = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending::<()>().await,
        }
    };
    #[cfg(not(unix))]
    let term = std::future::pending::<()>();
    tokio::select! {
        _ = ctrl_c => {}
        _ = term => {}
    }
}
