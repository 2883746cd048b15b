//! HTTP/JSON API over an atomically swapped lexicon snapshot.
//!
//! Readers load the current `Arc<LexiconIndex>` and never wait. Writers take
//! a mutex, apply the edit to a copy of the lexicon, re-index it and swap the
//! new snapshot in.

use std::io;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Duration;

use arc_swap::ArcSwap;
use arlex_core::{
    validate, Lemma, Lexicon, LexiconError, LexiconIndex, PosId, RelationEdge, RelationType, Severity, SynsetId,
    Violation, WordProfile,
};
use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;
use tokio::sync::Mutex;

use crate::rdf::{emit_rdf, RdfMapping};
use crate::tsv::{read_tsv, write_tsv, TsvError};

const DEFAULT_PAGE: usize = 50;
const MAX_PAGE: usize = 500;

/// Where the TSV pair lives on disk.
#[derive(Debug, Clone)]
pub struct Store {
    pub words: PathBuf,
    pub relations: PathBuf,
}

impl Store {
    pub fn in_dir(dir: &Path) -> Store {
        Store {
            words: dir.join("words.tsv"),
            relations: dir.join("relations.tsv"),
        }
    }

    /// Writes both files through temporaries so a crash leaves the old pair.
    pub fn save(&self, lexicon: &Lexicon) -> io::Result<()> {
        let (words, relations) = write_tsv(lexicon);
        for (path, text) in [(&self.words, words), (&self.relations, relations)] {
            let tmp = path.with_extension("tsv.tmp");
            std::fs::write(&tmp, text)?;
            std::fs::rename(&tmp, path)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Tsv(#[from] TsvError),
    #[error("lexicon has {} validation error(s)", .0.len())]
    InvalidLexicon(Vec<Violation>),
    #[error("cannot bind {addr}: {source}")]
    BindFailure { addr: SocketAddr, source: io::Error },
}

pub struct AppState {
    snapshot: ArcSwap<LexiconIndex>,
    writer: Mutex<()>,
    dirty: AtomicBool,
    store: Option<Store>,
    mapping: RdfMapping,
}

impl AppState {
    /// Refuses a lexicon with validation errors.
    pub fn new(lexicon: Lexicon, store: Option<Store>, mapping: RdfMapping) -> Result<AppState, ServiceError> {
        let errors: Vec<Violation> = validate(&lexicon).into_iter().filter(Violation::is_error).collect();
        if !errors.is_empty() {
            return Err(ServiceError::InvalidLexicon(errors));
        }
        Ok(AppState {
            snapshot: ArcSwap::from_pointee(LexiconIndex::new(lexicon)),
            writer: Mutex::new(()),
            dirty: AtomicBool::new(false),
            store,
            mapping,
        })
    }

    pub fn load(
        store: Store,
        taxonomy: arlex_core::PosTaxonomy,
        mapping: RdfMapping,
    ) -> Result<AppState, ServiceError> {
        let words = std::fs::read_to_string(&store.words)?;
        let relations = std::fs::read_to_string(&store.relations)?;
        let lexicon = read_tsv(&words, &relations, taxonomy)?;
        AppState::new(lexicon, Some(store), mapping)
    }

    /// The current snapshot. Holding it keeps it alive across later edits.
    pub fn snapshot(&self) -> Arc<LexiconIndex> {
        self.snapshot.load_full()
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty.load(Ordering::SeqCst)
    }

    /// Applies `edit` to a copy of the lexicon and publishes the result if
    /// the edit succeeds.
    pub async fn mutate<T>(
        &self,
        edit: impl FnOnce(&mut Lexicon) -> Result<T, LexiconError>,
    ) -> Result<T, LexiconError> {
        let _guard = self.writer.lock().await;
        let mut lexicon = self.snapshot.load().lexicon().clone();
        let out = edit(&mut lexicon)?;
        self.snapshot.store(Arc::new(LexiconIndex::new(lexicon)));
        self.dirty.store(true, Ordering::SeqCst);
        Ok(out)
    }

    /// Writes the TSV pair if anything changed. Returns whether it wrote.
    pub async fn save(&self) -> io::Result<bool> {
        let Some(store) = &self.store else {
            return Err(io::Error::new(
                io::ErrorKind::Unsupported,
                "no data directory configured",
            ));
        };
        let _guard = self.writer.lock().await;
        if !self.dirty.load(Ordering::SeqCst) {
            return Ok(false);
        }
        store.save(self.snapshot.load().lexicon())?;
        self.dirty.store(false, Ordering::SeqCst);
        Ok(true)
    }
}

/// Error body: `{code, message, subject}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
    subject: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>, subject: impl Into<String>) -> ApiError {
        ApiError {
            status,
            code,
            message: message.into(),
            subject: subject.into(),
        }
    }

    fn bad_request(message: String) -> ApiError {
        ApiError::new(StatusCode::BAD_REQUEST, "BadRequest", message, "")
    }
}

impl From<LexiconError> for ApiError {
    fn from(e: LexiconError) -> ApiError {
        let status = match e {
            LexiconError::WordNotFound { .. } | LexiconError::EdgeNotFound(_) => StatusCode::NOT_FOUND,
            LexiconError::PosConflict { .. } => StatusCode::CONFLICT,
            LexiconError::InvalidLemma { .. }
            | LexiconError::UnknownPos(_)
            | LexiconError::SelfRelation(_)
            | LexiconError::UnsupportedRelation(_) => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError::new(status, e.code(), e.to_string(), e.subject())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> ApiError {
        ApiError::bad_request(e.body_text())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> ApiError {
        ApiError::bad_request(e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({"code": self.code, "message": self.message, "subject": self.subject});
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;
type Shared = State<Arc<AppState>>;

fn lemma(text: &str) -> ApiResult<Lemma> {
    Lemma::new(text).map_err(ApiError::from)
}

fn relation(name: &str) -> ApiResult<RelationType> {
    name.parse().map_err(|_| {
        ApiError::new(
            StatusCode::UNPROCESSABLE_ENTITY,
            "UnknownRelationName",
            format!("unknown relation {name:?}"),
            name,
        )
    })
}

#[derive(Deserialize)]
struct SearchParams {
    #[serde(default)]
    q: String,
    #[serde(default)]
    fold: bool,
    #[serde(default)]
    offset: usize,
    limit: Option<usize>,
}

#[derive(Serialize)]
struct Page {
    total: usize,
    offset: usize,
    limit: usize,
    items: Vec<Lemma>,
}

async fn search(State(state): Shared, params: Result<Query<SearchParams>, QueryRejection>) -> ApiResult<Json<Page>> {
    let Query(p) = params?;
    let limit = p.limit.unwrap_or(DEFAULT_PAGE).min(MAX_PAGE);
    let snap = state.snapshot();
    let hits = snap.search_prefix(p.q.trim(), p.fold);
    Ok(Json(Page {
        total: hits.len(),
        offset: p.offset,
        limit,
        items: hits.into_iter().skip(p.offset).take(limit).cloned().collect(),
    }))
}

#[derive(Deserialize)]
struct FoldParam {
    #[serde(default)]
    fold: bool,
}

#[derive(Serialize)]
struct LookupBody {
    #[serde(flatten)]
    profile: WordProfile,
    candidates: Vec<Lemma>,
}

async fn word(
    State(state): Shared,
    UrlPath(text): UrlPath<String>,
    params: Result<Query<FoldParam>, QueryRejection>,
) -> ApiResult<Json<LookupBody>> {
    let Query(p) = params?;
    let found = state.snapshot().lookup(&text, p.fold)?;
    Ok(Json(LookupBody {
        profile: found.profile,
        candidates: found.candidates,
    }))
}

#[derive(Deserialize)]
struct DepthParam {
    depth: Option<usize>,
}

#[derive(Serialize)]
struct Reached {
    lemma: Lemma,
    depth: usize,
}

async fn chain(
    State(state): Shared,
    UrlPath((text, rel)): UrlPath<(String, String)>,
    params: Result<Query<DepthParam>, QueryRejection>,
) -> ApiResult<Json<Vec<Reached>>> {
    let Query(p) = params?;
    let rel = relation(&rel)?;
    let word = lemma(&text)?;
    let reached = state.snapshot().transitive(&word, rel, p.depth.unwrap_or(usize::MAX))?;
    Ok(Json(
        reached
            .into_iter()
            .map(|(lemma, depth)| Reached { lemma, depth })
            .collect(),
    ))
}

#[derive(Deserialize)]
struct NewWord {
    lemma: String,
    pos: Option<String>,
}

async fn add_word(State(state): Shared, body: Result<Json<NewWord>, JsonRejection>) -> ApiResult<Response> {
    let Json(req) = body?;
    let word = lemma(&req.lemma)?;
    let pos = PosId::new(req.pos.unwrap_or_else(|| "noun".into()));
    let (w, p) = (word.clone(), pos.clone());
    let created = state
        .mutate(move |lex| {
            let fresh = !lex.contains_word(&w);
            lex.add_word(w, &p)?;
            Ok(fresh)
        })
        .await?;
    let status = if created { StatusCode::CREATED } else { StatusCode::OK };
    Ok((status, Json(json!({"lemma": word, "pos": pos}))).into_response())
}

#[derive(Deserialize)]
struct EdgeBody {
    source: String,
    relation: String,
    target: String,
}

impl EdgeBody {
    fn edge(&self) -> ApiResult<RelationEdge> {
        let rel = relation(&self.relation)?;
        Ok(RelationEdge::new(lemma(&self.source)?, rel, lemma(&self.target)?))
    }
}

async fn add_relation(State(state): Shared, body: Result<Json<EdgeBody>, JsonRejection>) -> ApiResult<Response> {
    let Json(req) = body?;
    let edge = req.edge()?;
    let e = edge.clone();
    state
        .mutate(move |lex| lex.add_relation(&e.source, e.rel, &e.target))
        .await?;
    let inverse = edge.inverse();
    Ok((StatusCode::CREATED, Json(json!({"edge": edge, "inverse": inverse}))).into_response())
}

async fn remove_relation(
    State(state): Shared,
    body: Result<Json<EdgeBody>, JsonRejection>,
) -> ApiResult<Json<serde_json::Value>> {
    let Json(req) = body?;
    let edge = req.edge()?;
    let e = edge.clone();
    state
        .mutate(move |lex| lex.remove_relation(&e.source, e.rel, &e.target))
        .await?;
    let inverse = edge.inverse();
    Ok(Json(json!({"removed": [edge, inverse]})))
}

async fn synset(State(state): Shared, UrlPath(id): UrlPath<String>) -> ApiResult<Json<serde_json::Value>> {
    let not_found = || {
        ApiError::new(
            StatusCode::NOT_FOUND,
            "SynsetNotFound",
            format!("no synset {id}"),
            id.clone(),
        )
    };
    let n: u32 = id.parse().map_err(|_| not_found())?;
    let snap = state.snapshot();
    let found = snap.synset(SynsetId(n)).ok_or_else(not_found)?;
    Ok(Json(json!({"id": found.id, "members": found.members})))
}

async fn stats(State(state): Shared) -> Json<arlex_core::Stats> {
    Json(state.snapshot().stats())
}

async fn check(State(state): Shared) -> Json<serde_json::Value> {
    let violations = validate(state.snapshot().lexicon());
    let errors = violations.iter().filter(|v| v.severity == Severity::Error).count();
    Json(json!({
        "errors": errors,
        "warnings": violations.len() - errors,
        "violations": violations,
    }))
}

async fn export(State(state): Shared) -> ApiResult<Response> {
    let doc = emit_rdf(state.snapshot().lexicon(), &state.mapping)
        .map_err(|e| ApiError::new(StatusCode::CONFLICT, e.code(), e.to_string(), ""))?;
    Ok(([(header::CONTENT_TYPE, "application/rdf+xml; charset=utf-8")], doc).into_response())
}

async fn save(State(state): Shared) -> ApiResult<Json<serde_json::Value>> {
    match state.save().await {
        Ok(written) => Ok(Json(json!({"saved": written}))),
        Err(e) if e.kind() == io::ErrorKind::Unsupported => Err(ApiError::new(
            StatusCode::CONFLICT,
            "NoDataDirectory",
            e.to_string(),
            "",
        )),
        Err(e) => Err(ApiError::new(
            StatusCode::INTERNAL_SERVER_ERROR,
            "Io",
            e.to_string(),
            "",
        )),
    }
}

/// The API routes, plus static files from `static_dir` for everything else.
pub fn router(state: Arc<AppState>, static_dir: Option<&Path>) -> Router {
    let api = Router::new()
        .route("/api/words", get(search).post(add_word))
        .route("/api/words/{lemma}", get(word))
        .route("/api/words/{lemma}/transitive/{relation}", get(chain))
        .route("/api/relations", post(add_relation).delete(remove_relation))
        .route("/api/synsets/{id}", get(synset))
        .route("/api/stats", get(stats))
        .route("/api/validate", get(check))
        .route("/api/export/rdf", get(export))
        .route("/api/save", post(save))
        .with_state(state);
    match static_dir {
        Some(dir) => api.fallback_service(tower_http::services::ServeDir::new(dir)),
        None => api,
    }
}

pub struct ServeConfig {
    pub addr: SocketAddr,
    pub static_dir: Option<PathBuf>,
    pub autosave: Option<Duration>,
}

/// Runs until ctrl-c, then saves pending edits.
pub async fn serve(state: Arc<AppState>, config: ServeConfig) -> Result<(), ServiceError> {
    let listener = tokio::net::TcpListener::bind(config.addr)
        .await
        .map_err(|source| ServiceError::BindFailure {
            addr: config.addr,
            source,
        })?;
    if let (Some(every), true) = (config.autosave, state.store.is_some()) {
        let saver = Arc::clone(&state);
        tokio::spawn(async move {
            let mut tick = tokio::time::interval(every);
            tick.tick().await;
            loop {
                tick.tick().await;
                match saver.save().await {
                    Ok(true) => tracing::info!("autosaved lexicon"),
                    Ok(false) => {}
                    Err(e) => tracing::error!("autosave failed: {e}"),
                }
            }
        });
    }
    tracing::info!("listening on {}", config.addr);
    let app = router(Arc::clone(&state), config.static_dir.as_deref());
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if state.store.is_some() && state.save().await? {
        tracing::info!("saved lexicon on shutdown");
    }
    Ok(())
}
